#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

using namespace supersym;

namespace {

CampaignSpec spec_from(const char* text) { return campaign_from_json(Json::parse(text)); }

std::string stripped_lines(const CampaignResult& res)
{
    std::string out;
    for (const TaskRecord& r : res.records) {
        out += strip_timing(r.record).dump() + "\n";
    }
    return out + res.summary.dump() + "\n";
}

} // namespace

TEST(Campaign, EmptyTaskList)
{
    const CampaignResult res = run_campaign(spec_from(R"({"tasks":[]})"));
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_TRUE(res.records.empty());
    EXPECT_EQ(res.summary["summary"]["tasks"], 0);
    std::ostringstream os;
    write_report(os, res, "json");
    const std::string text = os.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
}

TEST(Campaign, SupersymmetryOfCPasses)
{
    const CampaignResult res =
        run_campaign(spec_from(R"({"profile":{"m":2,"n":2},"tasks":[{"task":"supersym-c","params":{"r_max":6}}]})"));
    EXPECT_EQ(res.exit_code, 0);
    ASSERT_EQ(res.records.size(), 1U);
    EXPECT_EQ(res.records[0].record["result"], "PASS");
    EXPECT_EQ(res.records[0].record["params"]["r_max"], 6);
    EXPECT_TRUE(res.records[0].record.contains("ms"));
}

TEST(Campaign, Hyp2IsExploratory)
{
    const CampaignResult res = run_campaign(
        spec_from(R"({"profile":{"m":1,"n":1,"p":2},"tasks":[{"task":"hyp2","params":{"degree_max":4}}]})"));
    EXPECT_EQ(res.exit_code, 0);
    const Json& cells = res.records[0].record["result"]["cells"];
    ASSERT_EQ(cells.size(), 5U);
    for (const Json& c : cells) {
        EXPECT_TRUE(c.contains("status"));
        EXPECT_TRUE(c.contains("basis_dim"));
        EXPECT_TRUE(c.contains("span_dim"));
    }
    EXPECT_TRUE(is_exploratory("hyp2"));
    EXPECT_FALSE(is_exploratory("asp"));
}

TEST(Campaign, AllTaskKindsRunAndPass)
{
    Json doc = {{"profile", {{"m", 1}, {"n", 1}, {"p", 3}}}, {"seed", 9}, {"tasks", Json::array()}};
    for (const std::string& kind : task_kinds()) {
        Json params = Json::object();
        if (kind == "interval-bound" || kind == "dk-order") {
            params["samples"] = 10;
        }
        if (kind == "asp") {
            params["samples"] = 4;
        }
        doc["tasks"].push_back({{"task", kind}, {"params", params}});
    }
    const CampaignResult res = run_campaign(campaign_from_json(doc), 4);
    for (const TaskRecord& r : res.records) {
        EXPECT_FALSE(r.failed) << r.record.dump();
    }
    EXPECT_EQ(res.exit_code, 0);
}

TEST(Campaign, DeterministicAcrossJobCounts)
{
    const char* text = R"({"profile":{"m":2,"n":1,"p":2},"seed":42,"tasks":[
        {"task":"interval-bound","params":{"samples":30}},
        {"task":"dk-order","params":{"samples":10}},
        {"task":"asp","params":{"samples":3}},
        {"task":"hyp2","params":{"degree_max":3}},
        {"task":"poset-axioms","params":{"bound":1}}]})";
    const CampaignResult a = run_campaign(spec_from(text), 1);
    const CampaignResult b = run_campaign(spec_from(text), 4);
    EXPECT_EQ(stripped_lines(a), stripped_lines(b));
    EXPECT_EQ(a.summary["summary"]["digest"], b.summary["summary"]["digest"]);
    // Task seeds default to seed + index.
    EXPECT_EQ(a.records[1].record["params"]["seed"], 43);
    // A different seed changes the digest.
    Json other = Json::parse(text);
    other["seed"] = 7;
    EXPECT_NE(run_campaign(campaign_from_json(other)).summary["summary"]["digest"], a.summary["summary"]["digest"]);
}

TEST(Campaign, UsageErrors)
{
    EXPECT_THROW(spec_from("[]"), UsageError);
    EXPECT_THROW(spec_from(R"({"tasks":[{"task":"nope"}]})"), UsageError);
    EXPECT_THROW(spec_from(R"({"tasks":[{"params":{}}]})"), UsageError);
    EXPECT_THROW(spec_from(R"({"tasks":[{"task":"gl11","params":3}]})"), UsageError);
    EXPECT_THROW(spec_from(R"({"profile":{"m":0}})"), UsageError);
    EXPECT_THROW(spec_from(R"({"profile":{"p":4}})"), UsageError);
    EXPECT_THROW(spec_from(R"({"format":"xml"})"), UsageError);
    EXPECT_THROW(run_campaign(spec_from(R"({"tasks":[{"task":"asp"}]})")), UsageError);
    EXPECT_THROW(run_campaign(spec_from(R"({"tasks":[{"task":"supersym-c","params":{"r_max":"6"}}]})")), UsageError);
    EXPECT_THROW(run_campaign(spec_from(R"({"tasks":[{"task":"sign-actions","params":{"r_max":9}}]})")), UsageError);
}

TEST(Campaign, StripTimingAndDigest)
{
    const Json doc = Json::parse(R"({"a":1,"ms":5,"b":[{"runtime_ms":3,"c":2}]})");
    EXPECT_EQ(strip_timing(doc).dump(), R"({"a":1,"b":[{"c":2}]})");
    // FNV-1a reference values
    EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Campaign, TextFormat)
{
    const CampaignResult res = run_campaign(
        spec_from(R"({"profile":{"m":1,"n":1,"p":2},"tasks":[{"task":"gl11"},{"task":"hyp2","params":{"degree_max":1}}]})"));
    std::ostringstream os;
    write_report(os, res, "text");
    EXPECT_NE(os.str().find("[0] gl11 PASS"), std::string::npos);
    EXPECT_NE(os.str().find("degree 1: VERIFIED"), std::string::npos);
}

TEST(CampaignChecks, Individual)
{
    EXPECT_TRUE(check_c_supersymmetric(Profile(3, 3), 6).passed);
    EXPECT_TRUE(check_d_supersymmetric(Profile(2, 2), 5).passed);
    EXPECT_TRUE(check_c_leading(Profile(2, 3), 5).passed);
    EXPECT_TRUE(check_d_leading(Profile(3, 2), 5).passed);
    EXPECT_TRUE(check_gl11(0, 6).passed);
    EXPECT_TRUE(check_gl11(5, 6).passed);
    const CompanionSweep sweep = check_companion(Profile(1, 2), 2);
    EXPECT_TRUE(sweep.result.passed);
    EXPECT_GT(sweep.checked, 0U);
    EXPECT_GT(sweep.undefined, 0U);
    EXPECT_TRUE(check_poset_axioms(1, 2, 2).passed);
    EXPECT_EQ(expected_c_leading(2, 1, 4), Weight(2, {1, 1, 2}));
    EXPECT_EQ(expected_d_leading(1, 2, 4), Weight(1, {-2, -1, -1}));
}
