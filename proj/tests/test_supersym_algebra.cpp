#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace supersym;

namespace {

LaurentPolynomial mono(const Profile& p, Exponents e, Rational c = 1) { return LaurentPolynomial::monomial(p, std::move(e), c); }

LaurentPolynomial expand(const MembershipReport& rep, const GeneratorSet& gens)
{
    LaurentPolynomial out(gens.profile());
    for (const ProductTerm& t : rep.combination) {
        LaurentPolynomial prod = LaurentPolynomial::one(gens.profile());
        for (const std::string& label : t.factors) {
            const auto it = std::find(gens.labels.begin(), gens.labels.end(), label);
            prod *= gens.elements[static_cast<std::size_t>(it - gens.labels.begin())];
        }
        out += prod.scaled(t.coefficient);
    }
    return out;
}

} // namespace

TEST(Predicates, Bisymmetry)
{
    const Profile p(2, 1);
    EXPECT_TRUE(is_bisymmetric(mono(p, {1, 0, 0}) + mono(p, {0, 1, 0})));
    EXPECT_FALSE(is_bisymmetric(mono(p, {1, 0, 0}) - mono(p, {0, 1, 0})));
    EXPECT_TRUE(is_bisymmetric(c_generator(Profile(2, 2), 3)));
    EXPECT_TRUE(is_bisymmetric(LaurentPolynomial(p)));
    // swapping x with y is not required
    EXPECT_TRUE(is_bisymmetric(mono(p, {1, 1, 0})));
}

TEST(Predicates, Cancellation)
{
    const Profile p(1, 1);
    EXPECT_TRUE(cancellation_test(mono(p, {1, 0}) - mono(p, {0, 1})));
    EXPECT_FALSE(cancellation_test(mono(p, {1, 0}) + mono(p, {0, 1})));
    EXPECT_THROW(cancellation_test(mono(p, {-1, 0})), std::domain_error);
    EXPECT_TRUE(is_supersymmetric(LaurentPolynomial::one(p)));
    EXPECT_FALSE(is_supersymmetric(mono(p, {1, 1})));
    EXPECT_THROW(is_supersymmetric(d_generator(p, 1)), std::domain_error);
    EXPECT_TRUE(is_supersymmetric_laurent(d_generator(p, 1)));
}

TEST(Predicates, GeneratorsAreSupersymmetric)
{
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            const Profile p(m, n);
            for (int r = 0; r <= 6; ++r) {
                ASSERT_TRUE(is_supersymmetric(c_generator(p, r))) << m << n << r;
                ASSERT_TRUE(is_supersymmetric_laurent(d_generator(p, r))) << m << n << r;
            }
        }
    }
}

TEST(Predicates, GL11Characters)
{
    for (int r = 1; r <= 6; ++r) {
        for (int i = 1; i <= r; ++i) {
            EXPECT_TRUE(is_supersymmetric(gl11_simple_char(i, r, 0)));
        }
    }
    for (std::uint32_t p : {2U, 3U}) {
        for (int r = 0; r <= 6; ++r) {
            const bool divides = r % static_cast<int>(p) == 0;
            for (int i = divides ? 0 : 1; i <= r; ++i) {
                const LaurentPolynomial f = gl11_simple_char(i, r, p);
                EXPECT_TRUE(is_supersymmetric(f));
                EXPECT_EQ(is_p_balanced(f, p), divides) << "p=" << p << " i=" << i << " r=" << r;
            }
        }
    }
}

TEST(Predicates, PBalanced)
{
    const Profile p(1, 1);
    EXPECT_FALSE(is_p_balanced(mono(p, {1, 1}), 3));
    EXPECT_TRUE(is_p_balanced(mono(p, {1, 2}), 3));
    EXPECT_THROW(is_p_balanced(mono(p, {1, 0}) + LaurentPolynomial::one(p), 3), std::invalid_argument);
    EXPECT_THROW(is_p_balanced(mono(p, {1, 1}), 4), std::invalid_argument);
    EXPECT_TRUE(is_p_balanced(LaurentPolynomial(p), 5));
    for (std::uint32_t q : {2U, 3U, 5U}) {
        const Profile pq(2, 1, q);
        EXPECT_TRUE(is_p_balanced(pow(elementary_sym(pq, Block::X, 1), q), q));
    }
}

TEST(PredicatesProperties, CancellationMatchesEvaluation)
{
    oracle::Rng rng(61);
    int agree_true = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Profile p(oracle::draw(rng, 1, 2), oracle::draw(rng, 1, 2));
        LaurentPolynomial f = oracle::random_poly(rng, p, 6, 0, 3);
        if (trial % 2 == 0) {
            // bias towards passing inputs
            f = f * c_generator(p, 1);
        }
        const bool got = cancellation_test(f);
        ASSERT_EQ(got, oracle::diagonal_constant_by_evaluation(f, rng)) << to_string(f);
        agree_true += got ? 1 : 0;
    }
    EXPECT_GT(agree_true, 20);
}

TEST(PredicatesProperties, SupersymmetryClosedUnderProducts)
{
    oracle::Rng rng(67);
    const Profile p(2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentPolynomial a = c_generator(p, oracle::draw(rng, 0, 3));
        const LaurentPolynomial b = c_generator(p, oracle::draw(rng, 0, 3));
        ASSERT_TRUE(is_supersymmetric(a * b + a.scaled(3)));
    }
}

TEST(Spaces, GradedDimensionExamples)
{
    const Profile p(1, 1);
    EXPECT_EQ(graded_dimension_As(p, 0), 1U);
    EXPECT_EQ(graded_dimension_As(p, 1), 1U);
    // x1^2 - y1^2 and x1 y1 - y1^2 (c_1^2 and c_2) span degree 2.
    EXPECT_EQ(graded_dimension_As(p, 2), 2U);
    const std::vector<std::size_t> dims{1, 1, 2, 3, 4};
    for (int d = 0; d <= 4; ++d) {
        EXPECT_EQ(graded_dimension_As(p, d), dims[static_cast<std::size_t>(d)]);
    }
    EXPECT_THROW(graded_dimension_As(p, -1), std::invalid_argument);
    EXPECT_THROW(supersymmetric_basis(p, -1), std::invalid_argument);
}

TEST(SpacesProperties, DimensionsAgreeAcrossSolvers)
{
    for (const Profile& p : {Profile(1, 1), Profile(2, 1), Profile(1, 2), Profile(2, 2), Profile(1, 1, 2U),
                             Profile(2, 1, 3U), Profile(2, 2, 2U)}) {
        for (int d = 0; d <= 4; ++d) {
            const ConstraintSystem sys = supersymmetry_constraints(p, d);
            const std::size_t rank_oracle =
                p.p() ? oracle::modp_rank(sys.matrix, *p.p()) : oracle::rational_rank(sys.matrix);
            const std::size_t dim = graded_dimension_As(p, d);
            ASSERT_EQ(dim, sys.monomials.size() - rank_oracle) << p.describe() << " d=" << d;
            const auto basis = supersymmetric_basis(p, d);
            ASSERT_EQ(basis.size(), dim) << p.describe() << " d=" << d;
            for (const auto& f : basis) {
                ASSERT_TRUE(is_supersymmetric(f));
                ASSERT_EQ(f.homogeneous_degree(), d);
            }
        }
    }
}

TEST(SpacesProperties, CharZeroSpaceIsSpannedByC)
{
    // Over Q the supersymmetric polynomials are generated by the c_r.
    for (const Profile& p : {Profile(1, 1), Profile(2, 1), Profile(2, 2)}) {
        for (int d = 0; d <= 4; ++d) {
            ASSERT_EQ(span_dimension(c_generators(p, 1, d == 0 ? 1 : d), d), graded_dimension_As(p, d)) << p.describe() << d;
        }
    }
}

TEST(SpacesProperties, PBalancedBasis)
{
    for (std::uint32_t q : {2U, 3U}) {
        const Profile p(1, 1, q);
        for (int d = 0; d <= 2 * static_cast<int>(q); ++d) {
            for (const auto& f : p_balanced_supersymmetric_basis(p, d)) {
                ASSERT_TRUE(is_supersymmetric(f));
                ASSERT_TRUE(is_p_balanced(f, q));
            }
        }
    }
    EXPECT_THROW(p_balanced_supersymmetric_basis(Profile(1, 1), 2), std::invalid_argument);
}

TEST(Asp, Examples)
{
    const Profile p(1, 1, 2U);
    const GeneratorSet g = asp_generators(p);
    ASSERT_EQ(g.elements.size(), 3U);
    EXPECT_EQ(g.elements[0], mono(p, {2, 0}));
    EXPECT_EQ(g.elements[1], mono(p, {0, 2}));
    EXPECT_EQ(g.elements[2], mono(p, {1, 1}));
    EXPECT_EQ(g.labels, (std::vector<std::string>{"sigma_x_1^2", "sigma_y_1^2", "u_1"}));
    EXPECT_THROW(asp_generators(Profile(1, 1)), std::invalid_argument);
}

TEST(AspProperties, GeneratorsAndProductsArePBalanced)
{
    for (std::uint32_t q : {2U, 3U, 5U}) {
        for (int m = 1; m <= 2; ++m) {
            for (int n = 1; n <= 2; ++n) {
                const Profile p(m, n, q);
                const GeneratorSet g = asp_generators(p);
                for (const auto& a : g.elements) {
                    ASSERT_TRUE(is_supersymmetric(a));
                    ASSERT_TRUE(is_p_balanced(a, q));
                    for (const auto& b : g.elements) {
                        ASSERT_TRUE(is_p_balanced(a * b, q));
                    }
                }
            }
        }
    }
}

TEST(Membership, Examples)
{
    const Profile p(2, 2);
    const GeneratorSet cs = c_generators(p, 0, 4);
    const LaurentPolynomial c2 = c_generator(p, 2);
    const MembershipReport rep = subalgebra_membership(c2 * c2, cs, 8);
    ASSERT_TRUE(rep.member);
    ASSERT_EQ(rep.combination.size(), 1U);
    EXPECT_EQ(rep.combination[0].factors, (std::vector<std::string>{"c_2", "c_2"}));
    EXPECT_EQ(rep.combination[0].coefficient, Rational(1));

    const Profile p11(1, 1);
    const GeneratorSet c1(std::vector<LaurentPolynomial>{c_generator(p11, 1)}, {"c_1"});
    EXPECT_FALSE(subalgebra_membership(mono(p11, {1, 0}), c1, 4).member);

    for (int r = 1; r <= 5; ++r) {
        for (int i = 1; i <= r; ++i) {
            const LaurentPolynomial f = gl11_simple_char(i, r, 0);
            const GeneratorSet gens = c_generators(p11, 0, r);
            const MembershipReport m = subalgebra_membership(f, gens, r);
            ASSERT_TRUE(m.member) << i << " " << r;
            ASSERT_EQ(expand(m, gens), f);
        }
    }
}

TEST(Membership, Errors)
{
    const Profile p(1, 1);
    const GeneratorSet cs = c_generators(p, 0, 3);
    EXPECT_THROW(subalgebra_membership(mono(p, {1, 0}) + LaurentPolynomial::one(p), cs, 4), std::invalid_argument);
    EXPECT_THROW(subalgebra_membership(mono(p, {-1, 2}), cs, 4), std::invalid_argument);
    EXPECT_THROW(subalgebra_membership(mono(p, {3, 2}), cs, 4), std::invalid_argument);
    const GeneratorSet laurent(std::vector<LaurentPolynomial>{d_generator(p, 1)}, {"d_1"});
    EXPECT_THROW(subalgebra_membership(mono(p, {1, 0}), laurent, 4), std::invalid_argument);
    EXPECT_THROW(GeneratorSet({}, {}), std::invalid_argument);
    EXPECT_THROW(GeneratorSet(std::vector<LaurentPolynomial>{c_generator(p, 1)}, {}), std::invalid_argument);
    EXPECT_THROW(subalgebra_membership(pow(c_generator(p, 1), 12), c_generators(p, 1, 1), 12, SearchLimits{0}),
                 ResourceLimitExceeded);
    EXPECT_TRUE(subalgebra_membership(LaurentPolynomial(p), cs, 0).member);
}

TEST(MembershipProperties, RecordedCombinationsExpandToQuery)
{
    oracle::Rng rng(71);
    const Profile p(2, 1);
    const GeneratorSet cs = c_generators(p, 1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        // random element of degree d built from products of c_r
        const int d = oracle::draw(rng, 1, 4);
        LaurentPolynomial f(p);
        for (const auto& prod : products_of_degree(cs, d)) {
            f += prod.value.scaled(Rational(oracle::draw(rng, -3, 3), oracle::draw(rng, 1, 2)));
        }
        if (f.is_zero()) {
            continue;
        }
        const MembershipReport rep = subalgebra_membership(f, cs, 4);
        ASSERT_TRUE(rep.member);
        ASSERT_EQ(expand(rep, cs), f);
        // A non-supersymmetric perturbation is never a member.
        const LaurentPolynomial g = f + mono(p, Exponents{d, 0, 0});
        ASSERT_FALSE(subalgebra_membership(g, cs, 4).member);
    }
}

TEST(MembershipProperties, SpanGrowsWithGenerators)
{
    const Profile p(2, 2, 3U);
    for (int d = 0; d <= 6; ++d) {
        GeneratorSet small = asp_generators(p);
        GeneratorSet big = asp_generators(p);
        big.append(c_generators(p, 1, 3));
        ASSERT_LE(span_dimension(small, d), span_dimension(big, d));
        ASSERT_LE(span_dimension(big, d), graded_dimension_As(p, d));
    }
}

TEST(Hypothesis2, Cells)
{
    const Hyp2Report zero = hypothesis2_cell(1, 1, 2, 0);
    EXPECT_EQ(zero.status, CellStatus::Verified);
    EXPECT_EQ(zero.basis_dim, 1U);
    for (int d = 0; d <= 4; ++d) {
        const Hyp2Report r = hypothesis2_cell(1, 1, 2, d);
        EXPECT_NE(r.status, CellStatus::Inconclusive);
        EXPECT_EQ(r.basis_dim, graded_dimension_As(Profile(1, 1, 2U), d));
        if (r.status == CellStatus::Verified) {
            EXPECT_EQ(r.span_dim, r.basis_dim);
            EXPECT_FALSE(r.witness);
        } else {
            ASSERT_TRUE(r.witness);
            EXPECT_TRUE(is_supersymmetric(*r.witness));
        }
    }
    const Hyp2Report capped = hypothesis2_cell(1, 1, 2, 6, SearchLimits{1});
    EXPECT_EQ(capped.status, CellStatus::Inconclusive);
    EXPECT_EQ(to_string(CellStatus::Refuted), "REFUTED");
    const Json doc = to_json(zero);
    EXPECT_EQ(doc["status"], "VERIFIED");
    EXPECT_EQ(doc["cell"]["p"], 2);
    EXPECT_TRUE(doc.contains("runtime_ms"));
}
