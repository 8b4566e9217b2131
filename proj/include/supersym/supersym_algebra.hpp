#ifndef SUPERSYM_SUPERSYM_ALGEBRA_HPP
#define SUPERSYM_SUPERSYM_ALGEBRA_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "json_io.hpp"
#include "laurent.hpp"
#include "linear_algebra.hpp"

namespace supersym {

/// Invariant under every adjacent transposition of x variables and of y variables.
inline bool is_bisymmetric(const LaurentPolynomial& f)
{
    const Profile& profile = f.profile();
    std::vector<std::size_t> swaps;
    for (int k = 0; k + 1 < profile.m(); ++k) {
        swaps.push_back(static_cast<std::size_t>(k));
    }
    for (int k = 0; k + 1 < profile.n(); ++k) {
        swaps.push_back(static_cast<std::size_t>(profile.m() + k));
    }
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t k : swaps) {
            Exponents s = e;
            std::swap(s[k], s[k + 1]);
            if (f.coefficient(s) != c) {
                return false;
            }
        }
    }
    return true;
}

/// True iff d/dt f(x_1 = y_1 = t) vanishes, without any sign condition on exponents.
inline bool diagonal_derivative_vanishes(const LaurentPolynomial& f)
{
    return derivative_t(substitute_diag(f, 1, 1)).is_zero();
}

/// d/dt f(x_1 = y_1 = t) == 0. Throws std::domain_error if x_1 or y_1 appears with a negative exponent.
inline bool cancellation_test(const LaurentPolynomial& f)
{
    const auto y1 = static_cast<std::size_t>(f.profile().m());
    for (const auto& [e, c] : f.terms()) {
        if (e[0] < 0 || e[y1] < 0) {
            throw std::domain_error("cancellation test needs nonnegative exponents in x1 and y1");
        }
    }
    return diagonal_derivative_vanishes(f);
}

inline bool is_supersymmetric(const LaurentPolynomial& f) { return is_bisymmetric(f) && cancellation_test(f); }

/// Laurent variant: the diagonal restriction is a Laurent polynomial in t and
/// must have zero derivative.
inline bool is_supersymmetric_laurent(const LaurentPolynomial& f)
{
    return is_bisymmetric(f) && diagonal_derivative_vanishes(f);
}

/// p divides lambda_i + lambda_j for every support weight and every i <= m < j.
/// Throws std::invalid_argument for non-homogeneous input.
inline bool is_p_balanced(const LaurentPolynomial& f, std::uint32_t p)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("p must be prime");
    }
    if (!f.is_zero() && !f.homogeneous_degree()) {
        throw std::invalid_argument("p-balance is defined for homogeneous polynomials only");
    }
    const int m = f.profile().m();
    const auto mod = static_cast<long long>(p);
    for (const auto& [e, c] : f.terms()) {
        for (int i = 0; i < m; ++i) {
            for (int j = m; j < f.profile().vars(); ++j) {
                if ((static_cast<long long>(e[static_cast<std::size_t>(i)]) + e[static_cast<std::size_t>(j)]) % mod != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Generators with parallel labels; all share one profile.
struct GeneratorSet {
    std::vector<LaurentPolynomial> elements;
    std::vector<std::string> labels;

    GeneratorSet(std::vector<LaurentPolynomial> els, std::vector<std::string> labs)
        : elements(std::move(els)), labels(std::move(labs))
    {
        if (elements.empty()) {
            throw std::invalid_argument("generator set is empty");
        }
        if (elements.size() != labels.size()) {
            throw std::invalid_argument("generator labels do not match elements");
        }
        for (const auto& g : elements) {
            elements.front().require_same_profile(g);
        }
    }

    const Profile& profile() const { return elements.front().profile(); }

    GeneratorSet& append(const GeneratorSet& other)
    {
        for (std::size_t k = 0; k < other.elements.size(); ++k) {
            elements.front().require_same_profile(other.elements[k]);
            elements.push_back(other.elements[k]);
            labels.push_back(other.labels[k]);
        }
        return *this;
    }
};

/// sigma_i(x)^p, sigma_j(y)^p and u_k = sigma_m(x)^k sigma_n(y)^{p-k}, 0 < k < p, over F_p.
inline GeneratorSet asp_generators(const Profile& profile)
{
    if (!profile.p()) {
        throw std::invalid_argument("A_s(p) generators need a prime characteristic");
    }
    const unsigned p = *profile.p();
    std::vector<LaurentPolynomial> els;
    std::vector<std::string> labs;
    for (int i = 1; i <= profile.m(); ++i) {
        els.push_back(pow(elementary_sym(profile, Block::X, i), p));
        labs.push_back("sigma_x_" + std::to_string(i) + "^" + std::to_string(p));
    }
    for (int j = 1; j <= profile.n(); ++j) {
        els.push_back(pow(elementary_sym(profile, Block::Y, j), p));
        labs.push_back("sigma_y_" + std::to_string(j) + "^" + std::to_string(p));
    }
    for (unsigned k = 1; k < p; ++k) {
        els.push_back(make_generator(profile, {GeneratorKind::U, static_cast<int>(k)}));
        labs.push_back("u_" + std::to_string(k));
    }
    return GeneratorSet(std::move(els), std::move(labs));
}

/// c_lo .. c_hi.
inline GeneratorSet c_generators(const Profile& profile, int lo, int hi)
{
    if (lo < 0 || hi < lo) {
        throw std::invalid_argument("empty c_r range");
    }
    std::vector<LaurentPolynomial> els;
    std::vector<std::string> labs;
    for (int r = lo; r <= hi; ++r) {
        els.push_back(c_generator(profile, r));
        labs.push_back("c_" + std::to_string(r));
    }
    return GeneratorSet(std::move(els), std::move(labs));
}

class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchLimits {
    std::size_t max_products = 200000;
};

/// A product of generators (as labels, with repetition) and its scalar.
struct ProductTerm {
    std::vector<std::string> factors;
    Rational coefficient;
};

struct MembershipReport {
    bool member = false;
    std::vector<ProductTerm> combination;
    int degree_cap = 0;
};

/// All exponent vectors with nonnegative entries and the given total, in lexicographic order.
inline std::vector<Exponents> monomials_of_degree(int vars, int degree)
{
    std::vector<Exponents> out;
    Exponents e(static_cast<std::size_t>(vars), 0);
    auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == vars - 1) {
            e[static_cast<std::size_t>(k)] = left;
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<std::size_t>(k)] = v;
            self(self, k + 1, left - v);
        }
    };
    rec(rec, 0, degree);
    return out;
}

struct GeneratorProduct {
    std::vector<std::size_t> factors; ///< indices into the usable generator list, non-decreasing
    LaurentPolynomial value;
};

namespace detail {

struct UsableGenerators {
    std::vector<const LaurentPolynomial*> elements;
    std::vector<std::string> labels;
    std::vector<int> degrees;
};

/// Drops constants (the unit is always available) and repeated labels; checks the rest.
inline UsableGenerators usable(const GeneratorSet& gens)
{
    UsableGenerators out;
    std::set<std::string> seen;
    for (std::size_t k = 0; k < gens.elements.size(); ++k) {
        const LaurentPolynomial& g = gens.elements[k];
        if (!seen.insert(gens.labels[k]).second || g.is_zero()) {
            continue;
        }
        if (!g.is_polynomial()) {
            throw std::invalid_argument("generator " + gens.labels[k] + " is not a polynomial");
        }
        const auto d = g.homogeneous_degree();
        if (!d) {
            throw std::invalid_argument("generator " + gens.labels[k] + " is not homogeneous");
        }
        if (*d == 0) {
            continue;
        }
        out.elements.push_back(&g);
        out.labels.push_back(gens.labels[k]);
        out.degrees.push_back(*d);
    }
    return out;
}

} // namespace detail

/// Every product of generators (multisets of labels) of total degree exactly `degree`.
inline std::vector<GeneratorProduct> products_of_degree(const GeneratorSet& gens, int degree, SearchLimits limits = {})
{
    const detail::UsableGenerators use = detail::usable(gens);
    std::vector<GeneratorProduct> out;
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start, int left, const LaurentPolynomial& partial) -> void {
        if (left == 0) {
            if (out.size() >= limits.max_products) {
                throw ResourceLimitExceeded("more than " + std::to_string(limits.max_products) + " generator products");
            }
            out.push_back({chosen, partial});
            return;
        }
        for (std::size_t k = start; k < use.elements.size(); ++k) {
            if (use.degrees[k] > left) {
                continue;
            }
            chosen.push_back(k);
            self(self, k, left - use.degrees[k], partial * *use.elements[k]);
            chosen.pop_back();
        }
    };
    rec(rec, 0, degree, LaurentPolynomial::one(gens.profile()));
    return out;
}

namespace detail {

/// Rows are polynomials, columns the monomials of `basis`.
inline Matrix coordinate_rows(const std::vector<const LaurentPolynomial*>& polys, const std::vector<Exponents>& basis)
{
    std::map<Exponents, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        index.emplace(basis[k], k);
    }
    Matrix out(polys.size(), basis.size());
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (const auto& [e, c] : polys[r]->terms()) {
            out(r, index.at(e)) = c;
        }
    }
    return out;
}

inline std::vector<Exponents> joint_support(const std::vector<const LaurentPolynomial*>& polys)
{
    std::set<Exponents> support;
    for (const auto* f : polys) {
        for (const auto& [e, c] : f->terms()) {
            support.insert(e);
        }
    }
    return {support.begin(), support.end()};
}

} // namespace detail

/// Decides whether homogeneous polynomial f lies in the span of generator
/// products of degree deg(f) by exact linear algebra on monomial coordinates.
/// A positive answer carries an explicit combination, re-expanded and checked
/// against f before returning.
inline MembershipReport subalgebra_membership(const LaurentPolynomial& f, const GeneratorSet& gens, int degree_cap,
                                              SearchLimits limits = {})
{
    f.require_same_profile(gens.elements.front());
    MembershipReport report;
    report.degree_cap = degree_cap;
    if (f.is_zero()) {
        report.member = true;
        return report;
    }
    if (!f.is_polynomial()) {
        throw std::invalid_argument("membership query must be a polynomial, not a Laurent polynomial");
    }
    const auto degree = f.homogeneous_degree();
    if (!degree) {
        throw std::invalid_argument("membership query must be homogeneous");
    }
    if (*degree > degree_cap) {
        throw std::invalid_argument("query degree " + std::to_string(*degree) + " exceeds the degree cap " +
                                    std::to_string(degree_cap));
    }
    const detail::UsableGenerators use = detail::usable(gens);
    const std::vector<GeneratorProduct> products = products_of_degree(gens, *degree, limits);
    if (products.empty()) {
        return report;
    }

    std::vector<const LaurentPolynomial*> polys;
    for (const auto& prod : products) {
        polys.push_back(&prod.value);
    }
    polys.push_back(&f);
    const std::vector<Exponents> support = detail::joint_support(polys);
    polys.pop_back();

    // Columns are products; solve A x = f.
    const Matrix rows = detail::coordinate_rows(polys, support);
    Matrix a(support.size(), products.size());
    for (std::size_t r = 0; r < products.size(); ++r) {
        for (std::size_t c = 0; c < support.size(); ++c) {
            a(c, r) = rows(r, c);
        }
    }
    std::vector<Rational> rhs(support.size());
    for (std::size_t c = 0; c < support.size(); ++c) {
        rhs[c] = f.coefficient(support[c]);
    }
    const Field& field = f.profile().field();
    const auto x = solve(a, rhs, field);
    if (!x) {
        return report;
    }
    LaurentPolynomial check(f.profile());
    for (std::size_t k = 0; k < products.size(); ++k) {
        if ((*x)[k] == 0) {
            continue;
        }
        ProductTerm term;
        for (std::size_t idx : products[k].factors) {
            term.factors.push_back(use.labels[idx]);
        }
        term.coefficient = (*x)[k];
        report.combination.push_back(std::move(term));
        check += products[k].value.scaled((*x)[k]);
    }
    if (!(check == f)) {
        throw std::logic_error("membership combination does not reproduce the query");
    }
    report.member = true;
    return report;
}

/// Dimension of the span of generator products of the given degree.
inline std::size_t span_dimension(const GeneratorSet& gens, int degree, SearchLimits limits = {})
{
    const auto products = products_of_degree(gens, degree, limits);
    std::vector<const LaurentPolynomial*> polys;
    for (const auto& prod : products) {
        polys.push_back(&prod.value);
    }
    if (polys.empty()) {
        return 0;
    }
    return rank(detail::coordinate_rows(polys, detail::joint_support(polys)), gens.profile().field());
}

/// Constraint matrix of supersymmetry on a generic homogeneous polynomial of
/// the given degree: one column per monomial (lexicographic), one row per
/// bisymmetry equation a_mu - a_{s mu} = 0 and per diagonal-derivative
/// coefficient.
struct ConstraintSystem {
    std::vector<Exponents> monomials;
    Matrix matrix;
};

inline ConstraintSystem supersymmetry_constraints(const Profile& profile, int degree)
{
    ConstraintSystem sys;
    sys.monomials = monomials_of_degree(profile.vars(), degree);
    std::map<Exponents, std::size_t> index;
    for (std::size_t k = 0; k < sys.monomials.size(); ++k) {
        index.emplace(sys.monomials[k], k);
    }
    const Field& field = profile.field();
    const std::size_t cols = sys.monomials.size();
    const int m = profile.m();
    std::set<std::pair<std::size_t, std::size_t>> seen_swaps;
    for (std::size_t k = 0; k < cols; ++k) {
        for (int s = 0; s + 1 < profile.vars(); ++s) {
            if (s == m - 1) {
                continue; // no swap across the blocks
            }
            Exponents e = sys.monomials[k];
            std::swap(e[static_cast<std::size_t>(s)], e[static_cast<std::size_t>(s) + 1]);
            const std::size_t other = index.at(e);
            if (other == k || !seen_swaps.insert({std::min(k, other), std::max(k, other)}).second) {
                continue;
            }
            std::vector<Rational> row(cols);
            row[k] = 1;
            row[other] = field.neg(1);
            sys.matrix.append_row(row);
        }
    }
    // d/dt of f(t, x_2.., t, y_2..): coefficient of t^{k-1} * rest is k * sum of a_mu.
    std::map<std::pair<int, Exponents>, std::vector<Rational>> derivative_rows;
    for (std::size_t k = 0; k < cols; ++k) {
        Exponents rest = sys.monomials[k];
        const int t_degree = rest[0] + rest[static_cast<std::size_t>(m)];
        rest[0] = 0;
        rest[static_cast<std::size_t>(m)] = 0;
        const Rational factor = field.from_int(t_degree);
        if (factor == 0) {
            continue;
        }
        auto [it, inserted] = derivative_rows.try_emplace({t_degree, rest}, std::vector<Rational>(cols));
        it->second[k] = factor;
    }
    for (const auto& [key, row] : derivative_rows) {
        sys.matrix.append_row(row);
    }
    if (sys.matrix.rows() == 0) {
        sys.matrix = Matrix(0, cols);
    }
    return sys;
}

namespace detail {

/// Key of the S_m x S_n orbit of a monomial: each block sorted descending.
inline Exponents orbit_key(const Exponents& e, int m)
{
    Exponents key = e;
    std::sort(key.begin(), key.begin() + m, std::greater<>());
    std::sort(key.begin() + m, key.end(), std::greater<>());
    return key;
}

/// Basis of bisymmetric degree-d polynomials with vanishing diagonal derivative,
/// restricted to orbits accepted by `keep`. Works on orbit sums, so bisymmetry
/// holds by construction and only the derivative equations remain.
inline std::vector<LaurentPolynomial> orbit_basis(const Profile& profile, int degree,
                                                  const std::function<bool(const Exponents&)>& keep)
{
    const int m = profile.m();
    const Field& field = profile.field();
    std::map<Exponents, std::vector<Exponents>> orbits;
    for (const Exponents& e : monomials_of_degree(profile.vars(), degree)) {
        const Exponents key = orbit_key(e, m);
        if (keep(key)) {
            orbits[key].push_back(e);
        }
    }
    std::vector<const std::vector<Exponents>*> vars;
    std::map<Exponents, std::size_t> var_of;
    for (const auto& [key, members] : orbits) {
        for (const Exponents& e : members) {
            var_of.emplace(e, vars.size());
        }
        vars.push_back(&members);
    }
    std::map<std::pair<int, Exponents>, std::vector<Rational>> rows;
    for (const auto& [e, v] : var_of) {
        Exponents rest = e;
        const int t_degree = rest[0] + rest[static_cast<std::size_t>(m)];
        rest[0] = 0;
        rest[static_cast<std::size_t>(m)] = 0;
        if (field.from_int(t_degree) == 0) {
            continue;
        }
        auto [it, inserted] = rows.try_emplace({t_degree, rest}, std::vector<Rational>(vars.size()));
        it->second[v] = field.add(it->second[v], 1);
    }
    Matrix a(0, vars.size());
    for (const auto& [key, row] : rows) {
        a.append_row(row);
    }
    std::vector<LaurentPolynomial> basis;
    if (vars.empty()) {
        return basis;
    }
    std::vector<std::vector<Rational>> kernel;
    if (a.rows() == 0) {
        for (std::size_t k = 0; k < vars.size(); ++k) {
            std::vector<Rational> v(vars.size());
            v[k] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = null_space(a, field);
    }
    for (const auto& v : kernel) {
        LaurentPolynomial f(profile);
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (v[k] != 0) {
                for (const Exponents& e : *vars[k]) {
                    f.add_term(e, v[k]);
                }
            }
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

} // namespace detail

/// Basis of the degree-d homogeneous part of A_s over the profile's field.
inline std::vector<LaurentPolynomial> supersymmetric_basis(const Profile& profile, int degree)
{
    if (degree < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    return detail::orbit_basis(profile, degree, [](const Exponents&) { return true; });
}

/// Nullity of the full supersymmetry constraint system at the given degree.
inline std::size_t graded_dimension_As(const Profile& profile, int degree)
{
    if (degree < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    const ConstraintSystem sys = supersymmetry_constraints(profile, degree);
    return sys.monomials.size() - rank(sys.matrix, profile.field());
}

/// Basis of the degree-d homogeneous part of A_s(p) (p-balanced and supersymmetric).
inline std::vector<LaurentPolynomial> p_balanced_supersymmetric_basis(const Profile& profile, int degree)
{
    if (!profile.p()) {
        throw std::invalid_argument("p-balanced basis needs a prime characteristic");
    }
    const auto p = static_cast<long long>(*profile.p());
    const int m = profile.m();
    return detail::orbit_basis(profile, degree, [&](const Exponents& e) {
        for (int i = 0; i < m; ++i) {
            for (std::size_t j = static_cast<std::size_t>(m); j < e.size(); ++j) {
                if ((e[static_cast<std::size_t>(i)] + e[j]) % p != 0) {
                    return false;
                }
            }
        }
        return true;
    });
}

enum class CellStatus { Verified, Refuted, Inconclusive };

inline std::string to_string(CellStatus s)
{
    switch (s) {
    case CellStatus::Verified:
        return "VERIFIED";
    case CellStatus::Refuted:
        return "REFUTED";
    case CellStatus::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

struct Hyp2Report {
    int m = 1;
    int n = 1;
    std::uint32_t p = 2;
    int degree = 0;
    CellStatus status = CellStatus::Inconclusive;
    std::optional<LaurentPolynomial> witness;
    std::size_t basis_dim = 0;
    std::size_t span_dim = 0;
    long long runtime_ms = 0;
};

/// One cell of the experiment "A_s is generated over A_s(p) by the c_r":
/// over F_p, compares the degree-d part of A_s with the span of products of
/// A_s(p) generators and c_1..c_d.
inline Hyp2Report hypothesis2_cell(int m, int n, std::uint32_t p, int degree, SearchLimits limits = {})
{
    const auto start = std::chrono::steady_clock::now();
    Hyp2Report report;
    report.m = m;
    report.n = n;
    report.p = p;
    report.degree = degree;
    const Profile profile(m, n, p);
    const std::vector<LaurentPolynomial> basis = supersymmetric_basis(profile, degree);
    report.basis_dim = basis.size();

    GeneratorSet gens = asp_generators(profile);
    if (degree >= 1) {
        gens.append(c_generators(profile, 1, degree));
    }
    try {
        const auto products = products_of_degree(gens, degree, limits);
        std::vector<const LaurentPolynomial*> polys;
        for (const auto& prod : products) {
            polys.push_back(&prod.value);
        }
        const std::vector<Exponents> monomials = monomials_of_degree(profile.vars(), degree);
        const Matrix span_rows = detail::coordinate_rows(polys, monomials);
        report.span_dim = polys.empty() ? 0 : rank(span_rows, profile.field());
        report.status = CellStatus::Verified;
        for (const LaurentPolynomial& b : basis) {
            std::vector<const LaurentPolynomial*> with = polys;
            with.push_back(&b);
            if (rank(detail::coordinate_rows(with, monomials), profile.field()) > report.span_dim) {
                report.status = CellStatus::Refuted;
                report.witness = b;
                break;
            }
        }
    } catch (const ResourceLimitExceeded&) {
        report.status = CellStatus::Inconclusive;
    }
    report.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline Json to_json(const Hyp2Report& r)
{
    Json doc;
    doc["cell"] = {{"m", r.m}, {"n", r.n}, {"p", r.p}, {"degree", r.degree}};
    doc["status"] = to_string(r.status);
    if (r.witness) {
        doc["witness"] = to_json(*r.witness);
    }
    doc["basis_dim"] = r.basis_dim;
    doc["span_dim"] = r.span_dim;
    doc["runtime_ms"] = r.runtime_ms;
    return doc;
}

inline Json to_json(const MembershipReport& r)
{
    Json doc;
    doc["member"] = r.member;
    Json combo = Json::array();
    for (const ProductTerm& t : r.combination) {
        combo.push_back({{"factors", t.factors}, {"c", format_rational(t.coefficient)}});
    }
    doc["combination"] = std::move(combo);
    doc["degree_cap"] = r.degree_cap;
    return doc;
}

} // namespace supersym

#endif
