#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace supersym;

namespace {

LaurentPolynomial mono(const Profile& p, Exponents e, Rational c = 1) { return LaurentPolynomial::monomial(p, std::move(e), c); }

} // namespace

TEST(Generators, ElementarySymmetric)
{
    const Profile p21(2, 1);
    EXPECT_EQ(elementary_sym(p21, Block::X, 1), mono(p21, {1, 0, 0}) + mono(p21, {0, 1, 0}));
    EXPECT_EQ(elementary_sym(p21, Block::X, 2), mono(p21, {1, 1, 0}));
    EXPECT_EQ(elementary_sym(p21, Block::Y, 0), LaurentPolynomial::one(p21));
    EXPECT_THROW(elementary_sym(p21, Block::X, 3), std::out_of_range);
    EXPECT_THROW(elementary_sym(p21, Block::Y, -1), std::out_of_range);
}

TEST(Generators, CompleteSymmetric)
{
    const Profile p11(1, 1);
    const Profile p12(1, 2);
    EXPECT_EQ(complete_sym(p11, Block::Y, 1), mono(p11, {0, 1}));
    EXPECT_EQ(complete_sym(p12, Block::Y, 2), mono(p12, {0, 2, 0}) + mono(p12, {0, 1, 1}) + mono(p12, {0, 0, 2}));
    EXPECT_EQ(complete_sym(p11, Block::Y, 2), mono(p11, {0, 2}));
    EXPECT_EQ(complete_sym(p12, Block::X, 0), LaurentPolynomial::one(p12));
    EXPECT_THROW(complete_sym(p11, Block::X, -1), std::invalid_argument);
}

TEST(Generators, CExamples)
{
    const Profile p(1, 1);
    EXPECT_EQ(c_generator(p, 1), mono(p, {1, 0}) - mono(p, {0, 1}));
    EXPECT_EQ(c_generator(p, 2), mono(p, {0, 2}) - mono(p, {1, 1}));
    EXPECT_EQ(c_generator(p, 0), LaurentPolynomial::one(p));
    EXPECT_THROW(c_generator(p, -1), std::invalid_argument);
}

TEST(Generators, CMatchesTermFormula)
{
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            const Profile p(m, n);
            for (int r = 0; r <= 5; ++r) {
                const LaurentPolynomial c = c_generator(p, r);
                std::size_t nonzero = 0;
                for (const Exponents& e : monomials_of_degree(p.vars(), r)) {
                    const Rational want = oracle::c_coefficient(m, e, r);
                    ASSERT_EQ(c.coefficient(e), want) << "m=" << m << " n=" << n << " r=" << r;
                    nonzero += want != 0 ? 1 : 0;
                }
                ASSERT_EQ(c.size(), nonzero);
            }
        }
    }
}

TEST(Generators, DExamples)
{
    const Profile p(1, 1);
    EXPECT_EQ(d_generator(p, 1), mono(p, {-1, 0}) - mono(p, {0, -1}));
    EXPECT_EQ(d_generator(p, 0), LaurentPolynomial::one(p));
    EXPECT_THROW(d_generator(p, -1), std::invalid_argument);
}

TEST(Generators, DMatchesInvertedCompleteElementaryFormula)
{
    // d_r = sum_k h_k(x^{-1}) (-1)^{r-k} sigma_{r-k}(y^{-1})
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            const Profile p(m, n);
            for (int r = 0; r <= 5; ++r) {
                LaurentPolynomial want(p);
                for (int k = 0; k <= r; ++k) {
                    if (r - k > n) {
                        continue;
                    }
                    LaurentPolynomial term = invert_variables(complete_sym(p, Block::X, k)) *
                                             invert_variables(elementary_sym(p, Block::Y, r - k));
                    want += (r - k) % 2 ? -term : term;
                }
                ASSERT_EQ(d_generator(p, r), want) << "m=" << m << " n=" << n << " r=" << r;
            }
        }
    }
}

TEST(Generators, GeneratingFunctionIdentity)
{
    // (sum c_r t^r) * (sum (-1)^r c_r(y|x) t^r) = 1, i.e. the generating
    // function of c_r is prod (1 + x_i t) / prod (1 + y_j t).
    for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 2; ++n) {
            const Profile p(m, n);
            const int cap = 5;
            const LaurentPolynomial one = LaurentPolynomial::one(p);
            TruncatedSeries denom = TruncatedSeries::one(p, cap);
            for (int j = 1; j <= n; ++j) {
                denom = series_mul(denom, TruncatedSeries::linear(one, LaurentPolynomial::y(p, j), cap));
            }
            TruncatedSeries numer = TruncatedSeries::one(p, cap);
            for (int i = 1; i <= m; ++i) {
                numer = series_mul(numer, TruncatedSeries::linear(one, LaurentPolynomial::x(p, i), cap));
            }
            TruncatedSeries cs(p, cap);
            for (int r = 0; r <= cap; ++r) {
                cs.set(r, c_generator(p, r));
            }
            ASSERT_EQ(series_mul(cs, denom), numer) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Generators, Berezinian)
{
    const Profile p11(1, 1);
    const Profile p21(2, 1);
    EXPECT_EQ(berezinian_char(p11), mono(p11, {1, -1}));
    EXPECT_EQ(berezinian_char(p21), mono(p21, {1, 1, -1}));
    EXPECT_EQ(berezinian_char(p21) * invert_variables(berezinian_char(p21)), LaurentPolynomial::one(p21));
}

TEST(Generators, CompanionExamples)
{
    for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 2; ++n) {
            const Profile p(m, n);
            EXPECT_EQ(companion_image(p, Weight::zero(m, n)), LaurentPolynomial::one(p));
            std::vector<int> theta(static_cast<std::size_t>(m + n), 1);
            for (int j = 0; j < n; ++j) {
                theta[static_cast<std::size_t>(m + j)] = -1;
            }
            const LaurentPolynomial f = companion_image(p, Weight(m, theta));
            EXPECT_EQ(f, berezinian_char(p));
            const auto lead = leading_summands(f);
            ASSERT_EQ(lead.size(), 1U);
            EXPECT_EQ(lead.front().first, Weight(m, theta));
        }
    }
}

TEST(Generators, CompanionErrors)
{
    const Profile p(2, 1);
    // not dominant
    EXPECT_THROW(companion_image(p, Weight(2, {0, 1, 0})), std::invalid_argument);
    // shape mismatch
    EXPECT_THROW(companion_image(p, Weight(1, {0, 0})), std::invalid_argument);
    // lambda_m + lambda_{m+1} < 0 needs a negative power of c_m
    EXPECT_THROW(companion_image(p, Weight(2, {0, 0, -1})), std::domain_error);
    EXPECT_NO_THROW(companion_image(p, Weight(2, {1, 1, -1})));
}

TEST(Generators, CompanionExponentsRebuildWeight)
{
    // The exponents are read back as a weight through the leading weights of the factors.
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            oracle::box(m + n, -2, 2, [&](const std::vector<int>& v) {
                const Weight lambda(m, v);
                if (!in_cone(lambda, Cone::Dominant) || v[static_cast<std::size_t>(m - 1)] + v[static_cast<std::size_t>(m)] < 0) {
                    return;
                }
                const CompanionExponents ex = companion_exponents(lambda);
                std::vector<int> acc(v.size(), 0);
                for (int k = 0; k < m; ++k) {
                    acc[static_cast<std::size_t>(k)] += ex.berezinian;
                }
                for (int j = 0; j < n; ++j) {
                    acc[static_cast<std::size_t>(m + j)] -= ex.berezinian;
                }
                for (int s = 1; s <= n - 1; ++s) {
                    // Ber^{-1} d_s has leading weight (-1^m | (1)^{n-s}, 0^s)
                    const int e = ex.ber_inv_d[static_cast<std::size_t>(s - 1)];
                    for (int k = 0; k < m; ++k) {
                        acc[static_cast<std::size_t>(k)] -= e;
                    }
                    for (int j = 0; j < n - s; ++j) {
                        acc[static_cast<std::size_t>(m + j)] += e;
                    }
                }
                for (int k = 0; k < m; ++k) {
                    acc[static_cast<std::size_t>(k)] += ex.c_top;
                }
                for (int t = 1; t <= m - 1; ++t) {
                    for (int k = 0; k < t; ++k) {
                        acc[static_cast<std::size_t>(k)] += ex.c_low[static_cast<std::size_t>(t - 1)];
                    }
                }
                ASSERT_EQ(acc, v) << to_string(lambda);
            });
        }
    }
}

TEST(Generators, IdsAndLabels)
{
    const Profile p(2, 2, 3U);
    EXPECT_EQ(parse_generator_id("c_3").label(), "c_3");
    EXPECT_EQ(parse_generator_id("D2").label(), "d_2");
    EXPECT_EQ(parse_generator_id("ber").label(), "ber");
    EXPECT_EQ(parse_generator_id("sigma_x_1").label(), "sigma_x_1");
    EXPECT_EQ(parse_generator_id("u_2").label(), "u_2");
    EXPECT_THROW(parse_generator_id("q_1"), std::invalid_argument);
    EXPECT_THROW(parse_generator_id("c"), std::invalid_argument);
    EXPECT_EQ(make_generator(p, parse_generator_id("c_2")), c_generator(p, 2));
    EXPECT_EQ(make_generator(p, parse_generator_id("h_y_2")), complete_sym(p, Block::Y, 2));
    EXPECT_EQ(make_generator(p, parse_generator_id("u_1")),
              elementary_sym(p, Block::X, 2) * pow(elementary_sym(p, Block::Y, 2), 2));
    EXPECT_THROW(make_generator(p, parse_generator_id("u_3")), std::out_of_range);
    EXPECT_THROW(make_generator(Profile(2, 2), parse_generator_id("u_1")), std::invalid_argument);
}
