#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace supersym;

TEST(Json, SerializeCanonical)
{
    const Profile p(1, 1);
    EXPECT_EQ(serialize(c_generator(p, 1)),
              R"({"m":1,"n":1,"p":null,"terms":[{"e":[0,1],"c":"-1"},{"e":[1,0],"c":"1"}]})");
    EXPECT_EQ(serialize(LaurentPolynomial(Profile(2, 1, 3U))), R"({"m":2,"n":1,"p":3,"terms":[]})");
    EXPECT_EQ(serialize(LaurentPolynomial::monomial(p, {-1, 2}, Rational(-2, 3))),
              R"({"m":1,"n":1,"p":null,"terms":[{"e":[-1,2],"c":"-2/3"}]})");
}

TEST(Json, CanonicalizesInput)
{
    // Out-of-order terms, reducible fractions and residues mod p are normalized.
    const auto f = parse_polynomial(R"({"m":1,"n":1,"p":null,"terms":[{"e":[1,0],"c":"2/4"},{"e":[0,1],"c":"-3"}]})");
    EXPECT_EQ(serialize(f), R"({"m":1,"n":1,"p":null,"terms":[{"e":[0,1],"c":"-3"},{"e":[1,0],"c":"1/2"}]})");
    const auto g = parse_polynomial(R"({"m":1,"n":1,"p":5,"terms":[{"e":[1,0],"c":"-1"},{"e":[0,1],"c":"1/2"}]})");
    EXPECT_EQ(serialize(g), R"({"m":1,"n":1,"p":5,"terms":[{"e":[0,1],"c":"3"},{"e":[1,0],"c":"4"}]})");
    // A missing "p" means characteristic 0.
    EXPECT_EQ(parse_polynomial(R"({"m":1,"n":1,"terms":[]})").profile().p(), std::nullopt);
}

TEST(Json, RejectsMalformedDocuments)
{
    const char* bad[] = {
        "not json",
        "[]",
        R"({"n":1,"terms":[]})",
        R"({"m":0,"n":1,"terms":[]})",
        R"({"m":1,"n":1,"p":4,"terms":[]})",
        R"({"m":1,"n":1,"p":1,"terms":[]})",
        R"({"m":1,"n":1,"p":"2","terms":[]})",
        R"({"m":1,"n":1})",
        R"({"m":1,"n":1,"terms":[{"e":[1],"c":"1"}]})",
        R"({"m":1,"n":1,"terms":[{"e":[1,0,0],"c":"1"}]})",
        R"({"m":1,"n":1,"terms":[{"e":[1,0],"c":"0"}]})",
        R"({"m":1,"n":1,"terms":[{"e":[1,0],"c":1}]})",
        R"({"m":1,"n":1,"terms":[{"e":[1.5,0],"c":"1"}]})",
        R"({"m":1,"n":1,"terms":[{"e":[1,0],"c":"x"}]})",
        R"({"m":1,"n":1,"terms":[{"e":[1,0],"c":"1"},{"e":[1,0],"c":"2"}]})",
        R"({"m":1,"n":1,"p":3,"terms":[{"e":[1,0],"c":"3"}]})",
        R"({"m":1,"n":1,"p":3,"terms":[{"e":[1,0],"c":"1/3"}]})",
    };
    for (const char* doc : bad) {
        EXPECT_THROW(parse_polynomial(doc), FormatError) << doc;
    }
}

TEST(JsonProperties, RoundTripIsBitExact)
{
    oracle::Rng rng(99);
    for (const Profile& p : {Profile(1, 1), Profile(2, 2), Profile(3, 1, 7U), Profile(1, 2, 2U)}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = oracle::random_poly(rng, p, 20);
            const std::string text = serialize(f);
            const auto back = parse_polynomial(text);
            ASSERT_EQ(back, f);
            ASSERT_EQ(serialize(back), text);
        }
    }
}
