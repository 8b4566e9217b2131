// Command-line front end for the supersym library.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <supersym/supersym.hpp>

namespace {

using namespace supersym;

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Globals {
    int m = 1;
    int n = 1;
    std::optional<std::uint32_t> p;
    std::uint64_t seed = 0;
    bool json = false;
    int cap = 8;
    unsigned jobs = 1;
};

Profile profile_of(const Globals& g) { return Profile(g.m, g.n, g.p); }

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

/// A polynomial named on the command line: "-" (stdin JSON), inline JSON, a
/// JSON file, companion(<weight>), or a generator label such as c_3.
LaurentPolynomial load_polynomial(const std::string& source, const Globals& g)
{
    if (source == "-") {
        return parse_polynomial(read_all(std::cin));
    }
    if (!source.empty() && source.front() == '{') {
        return parse_polynomial(source);
    }
    if (std::ifstream file(source); file) {
        return parse_polynomial(read_all(file));
    }
    const std::string prefix = "companion(";
    if (source.rfind(prefix, 0) == 0 && source.back() == ')') {
        const Weight lambda = parse_weight(source.substr(prefix.size(), source.size() - prefix.size() - 1));
        return companion_image(Profile(lambda.m(), lambda.n(), g.p), lambda);
    }
    return make_generator(profile_of(g), parse_generator_id(source));
}

void print_polynomial(const LaurentPolynomial& f, const Globals& g)
{
    std::cout << (g.json ? serialize(f) : to_string(f)) << '\n';
}

void print_json_or(const Json& doc, const std::string& text, const Globals& g)
{
    std::cout << (g.json ? doc.dump() : text) << '\n';
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void cmd_gen(const std::vector<std::string>& labels, const Globals& g)
{
    const Profile profile = profile_of(g);
    for (const std::string& label : labels) {
        print_polynomial(make_generator(profile, parse_generator_id(label)), g);
    }
}

void cmd_leading(const std::string& source, const Globals& g)
{
    const LaurentPolynomial f = load_polynomial(source, g);
    const auto lead = leading_summands(f);
    Json list = Json::array();
    std::string text;
    for (const auto& [w, c] : lead) {
        list.push_back({{"weight", w.entries()}, {"c", format_rational(c)}});
        text += to_string(w) + " coefficient " + format_rational(c) + "\n";
    }
    text += "unique: " + yes_no(lead.size() == 1);
    print_json_or({{"m", f.profile().m()}, {"leading", list}, {"unique", lead.size() == 1}}, text, g);
}

void cmd_check_ss(const std::string& source, const Globals& g)
{
    const LaurentPolynomial f = load_polynomial(source, g);
    const bool laurent = !f.is_polynomial();
    const bool bisym = is_bisymmetric(f);
    const bool cancel = diagonal_derivative_vanishes(f);
    print_json_or({{"bisymmetric", bisym}, {"cancellation", cancel}, {"supersymmetric", bisym && cancel}, {"laurent", laurent}},
                  "bisymmetric: " + yes_no(bisym) + "\ncancellation: " + yes_no(cancel) +
                      "\nsupersymmetric: " + yes_no(bisym && cancel) + (laurent ? " (Laurent)" : ""),
                  g);
}

void cmd_check_pbal(const std::string& source, const Globals& g)
{
    const LaurentPolynomial f = load_polynomial(source, g);
    const auto p = g.p ? g.p : f.profile().p();
    if (!p) {
        throw std::invalid_argument("check-pbal needs --p");
    }
    const bool b = is_p_balanced(f, *p);
    print_json_or({{"p", *p}, {"p_balanced", b}}, "p-balanced (p=" + std::to_string(*p) + "): " + yes_no(b), g);
}

void cmd_member(const std::string& source, std::vector<std::string> labels, bool with_asp, const Globals& g)
{
    const LaurentPolynomial f = load_polynomial(source, g);
    const Profile& profile = f.profile();
    std::vector<LaurentPolynomial> els;
    if (labels.empty() && !with_asp) {
        for (int r = 0; r <= g.cap; ++r) {
            labels.push_back("c_" + std::to_string(r));
        }
    }
    for (const std::string& label : labels) {
        els.push_back(make_generator(profile, parse_generator_id(label)));
    }
    std::optional<GeneratorSet> gens;
    if (!els.empty()) {
        gens.emplace(std::move(els), labels);
    }
    if (with_asp) {
        const GeneratorSet asp = asp_generators(profile);
        if (gens) {
            gens->append(asp);
        } else {
            gens.emplace(asp);
        }
    }
    const MembershipReport rep = subalgebra_membership(f, *gens, g.cap);
    std::string text = std::string("member: ") + yes_no(rep.member);
    for (const ProductTerm& t : rep.combination) {
        text += "\n  " + format_rational(t.coefficient) + " *";
        for (const std::string& factor : t.factors) {
            text += " " + factor;
        }
        if (t.factors.empty()) {
            text += " 1";
        }
    }
    print_json_or(to_json(rep), text, g);
}

void cmd_hyp2(int lo, int hi, const Globals& g)
{
    if (!g.p) {
        throw std::invalid_argument("hyp2 needs --p");
    }
    if (lo < 0 || hi < lo) {
        throw std::invalid_argument("empty degree range");
    }
    for (int d = lo; d <= hi; ++d) {
        const Hyp2Report rep = hypothesis2_cell(g.m, g.n, *g.p, d);
        std::string text = "degree " + std::to_string(d) + ": " + to_string(rep.status) + " (basis " +
                           std::to_string(rep.basis_dim) + ", span " + std::to_string(rep.span_dim) + ")";
        if (rep.witness) {
            text += "\n  witness: " + to_string(*rep.witness);
        }
        print_json_or(to_json(rep), text, g);
    }
}

Json weights_json(const std::vector<Weight>& ws)
{
    Json out = Json::array();
    for (const Weight& w : ws) {
        out.push_back(w.entries());
    }
    return out;
}

std::string weights_text(const std::vector<Weight>& ws)
{
    std::string s;
    for (const Weight& w : ws) {
        s += (s.empty() ? "" : "\n") + to_string(w);
    }
    return s.empty() ? "(none)" : s;
}

int run_campaign_file(const std::string& path, const std::optional<std::uint64_t>& seed,
                      const std::optional<std::string>& output, const Globals& g)
{
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot read campaign file '" + path + "'");
    }
    Json doc;
    try {
        doc = Json::parse(read_all(file));
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("campaign file is not JSON: ") + e.what());
    }
    CampaignSpec spec = campaign_from_json(doc);
    if (seed) {
        spec.seed = *seed;
    }
    if (output) {
        spec.output = *output;
    }
    if (g.json) {
        spec.format = "json";
    }
    const CampaignResult res = run_campaign(spec, g.jobs);
    if (spec.output == "-") {
        write_report(std::cout, res, spec.format);
    } else {
        std::ofstream out(spec.output);
        if (!out) {
            throw UsageError("cannot write report to '" + spec.output + "'");
        }
        write_report(out, res, spec.format);
    }
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Supersymmetric Laurent polynomials and GL(m|n) supercharacters"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--m", g.m, "number of even variables x_1..x_m")->check(CLI::PositiveNumber);
    app.add_option("--n", g.n, "number of odd variables y_1..y_n")->check(CLI::PositiveNumber);
    app.add_option("--p", g.p, "prime characteristic (omit for characteristic 0)");
    auto* seed_opt = app.add_option("--seed", g.seed, "RNG seed for sampled tasks");
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--cap", g.cap, "degree cap for membership (also the default c_r range)")->check(CLI::NonNegativeNumber);
    app.add_option("--jobs", g.jobs, "worker threads for campaigns")->check(CLI::PositiveNumber);

    int exit_code = 0;

    auto* gen = app.add_subcommand("gen", "print named generators (c_r, d_r, ber, sigma_x_i, h_y_j, u_k)");
    std::vector<std::string> gen_labels;
    gen->add_option("labels", gen_labels, "generator labels")->required();
    gen->callback([&] { cmd_gen(gen_labels, g); });

    auto* chr = app.add_subcommand("char", "supercharacters");
    chr->require_subcommand(1);
    int char_r = 1;
    int char_i = 1;
    bool char_dual = false;
    chr->add_subcommand("std", "standard module E")->callback([&] { print_polynomial(supercharacter(standard_superspace(profile_of(g))), g); });
    chr->add_subcommand("dual", "dual module E*")->callback(
        [&] { print_polynomial(supercharacter(dual_superspace(standard_superspace(profile_of(g)))), g); });
    auto* ext = chr->add_subcommand("ext", "exterior power of E");
    ext->add_option("--r", char_r, "degree")->required()->check(CLI::NonNegativeNumber);
    ext->callback([&] { print_polynomial(exterior_power_char(standard_superspace(profile_of(g)), char_r), g); });
    auto* sym = chr->add_subcommand("sym", "symmetric power of E (or E* with --dual)");
    sym->add_option("--r", char_r, "degree")->required()->check(CLI::NonNegativeNumber);
    sym->add_flag("--dual", char_dual, "use E*");
    sym->callback([&] {
        const SuperBasis e = standard_superspace(profile_of(g));
        print_polynomial(symmetric_power_char(char_dual ? dual_superspace(e) : e, char_r), g);
    });
    auto* gl11 = chr->add_subcommand("gl11", "simple GL(1|1)-module L(i | r-i)");
    gl11->add_option("--i", char_i, "x exponent")->required();
    gl11->add_option("--r", char_r, "total degree")->required();
    gl11->callback([&] { print_polynomial(gl11_simple_char(char_i, char_r, g.p.value_or(0)), g); });

    std::string source;
    auto* leading = app.add_subcommand("leading", "leading summands in the dominance order");
    leading->add_option("source", source, "label, companion(w), JSON file, inline JSON or -")->required();
    leading->callback([&] { cmd_leading(source, g); });

    auto* check_ss = app.add_subcommand("check-ss", "supersymmetry test");
    check_ss->add_option("source", source, "label, companion(w), JSON file, inline JSON or -")->required();
    check_ss->callback([&] { cmd_check_ss(source, g); });

    auto* check_pbal = app.add_subcommand("check-pbal", "p-balance test");
    check_pbal->add_option("source", source, "label, companion(w), JSON file, inline JSON or -")->required();
    check_pbal->callback([&] { cmd_check_pbal(source, g); });

    auto* member = app.add_subcommand("member", "membership in the subalgebra generated by given elements");
    std::vector<std::string> member_gens;
    bool member_asp = false;
    member->add_option("source", source, "label, companion(w), JSON file, inline JSON or -")->required();
    member->add_option("--gens", member_gens, "generator labels (default c_0..c_cap)")->delimiter(',');
    member->add_flag("--asp", member_asp, "add the A_s(p) generators");
    member->callback([&] { cmd_member(source, member_gens, member_asp, g); });

    auto* hyp2 = app.add_subcommand("hyp2", "A_s versus the span of A_s(p) generators and c_r");
    int degree = 0;
    std::optional<int> degree_max;
    hyp2->add_option("--degree", degree, "degree (or lower end with --degree-max)")->check(CLI::NonNegativeNumber);
    hyp2->add_option("--degree-max", degree_max, "upper end of a degree range");
    hyp2->callback([&] { cmd_hyp2(degree, degree_max.value_or(degree), g); });

    auto* poset = app.add_subcommand("poset", "dominance order queries");
    poset->require_subcommand(1);
    std::string wa;
    std::string wb;
    std::string cone_name = "dominant";
    auto* leq_cmd = poset->add_subcommand("leq", "compare two weights");
    leq_cmd->add_option("a", wa, "weight such as 1,0|0,1")->required();
    leq_cmd->add_option("b", wb, "weight")->required();
    leq_cmd->callback([&] {
        const Weight a = parse_weight(wa);
        const Weight b = parse_weight(wb);
        print_json_or({{"leq", leq(a, b)}, {"less", less(a, b)}}, "leq: " + yes_no(leq(a, b)) + "\nless: " + yes_no(less(a, b)), g);
    });
    auto* pred = poset->add_subcommand("pred", "maximal weights strictly below, within a cone");
    pred->add_option("weight", wa, "weight")->required();
    pred->add_option("--cone", cone_name, "all, dominant or nonneg");
    pred->callback([&] {
        const auto preds = predecessors(parse_weight(wa), parse_cone(cone_name));
        print_json_or({{"predecessors", weights_json(preds)}}, weights_text(preds), g);
    });
    auto* interval = poset->add_subcommand("interval", "nonnegative dominant weights below a weight");
    interval->add_option("weight", wa, "weight")->required();
    interval->callback([&] {
        const Weight mu = parse_weight(wa);
        const auto ws = interval_nonneg_dominant(mu);
        const std::string bound = interval_size_bound(mu).str();
        print_json_or({{"interval", weights_json(ws)}, {"size", ws.size()}, {"bound", bound}},
                      weights_text(ws) + "\nsize " + std::to_string(ws.size()) + " (bound " + bound + ")", g);
    });
    auto* dk = poset->add_subcommand("dk", "diagonal weights of an ideal slice, in filtration order");
    std::vector<std::string> dk_gens;
    int cutoff = 1;
    dk->add_option("--gen", dk_gens, "generator: w for (-w, w), or lower;upper")->required();
    dk->add_option("--cutoff", cutoff, "slice depth")->check(CLI::PositiveNumber);
    dk->callback([&] {
        std::vector<WeightPair> pairs;
        for (const std::string& s : dk_gens) {
            pairs.push_back(parse_weight_pair(s));
        }
        const PairOrder order(pairs.front().upper.m(), pairs.front().upper.n());
        const auto seq = dk_weight_sequence(WeightIdeal<PairOrder>(order, pairs), cutoff);
        print_json_or({{"sequence", weights_json(seq)}}, weights_text(seq), g);
    });

    auto* campaign = app.add_subcommand("campaign", "run a batch verification campaign");
    std::string campaign_file;
    std::optional<std::string> campaign_output;
    campaign->add_option("spec", campaign_file, "campaign JSON file")->required();
    campaign->add_option("--output", campaign_output, "report path (overrides the campaign file)");
    campaign->callback([&] {
        const std::optional<std::uint64_t> seed = seed_opt->count() ? std::optional<std::uint64_t>(g.seed) : std::nullopt;
        exit_code = run_campaign_file(campaign_file, seed, campaign_output, g);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const ResourceLimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::logic_error& e) {
        // invalid_argument, domain_error, out_of_range and format errors all mean bad input.
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return exit_code;
}
