#ifndef SUPERSYM_SUPERCHARACTERS_HPP
#define SUPERSYM_SUPERCHARACTERS_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "weights.hpp"

namespace supersym {

struct BasisVector {
    Weight weight;
    int parity; ///< 0 even, 1 odd

    bool operator==(const BasisVector&) const = default;
};

/// Z_2-homogeneous weight basis of a T-diagonalized supermodule.
class SuperBasis {
public:
    SuperBasis(Profile profile, std::vector<BasisVector> vectors) : profile_(std::move(profile)), vectors_(std::move(vectors))
    {
        for (const BasisVector& v : vectors_) {
            if (v.weight.m() != profile_.m() || v.weight.n() != profile_.n()) {
                throw std::invalid_argument("basis weight has the wrong shape");
            }
            if (v.parity != 0 && v.parity != 1) {
                throw std::invalid_argument("parity must be 0 or 1");
            }
        }
    }

    const Profile& profile() const { return profile_; }
    const std::vector<BasisVector>& vectors() const { return vectors_; }
    std::size_t size() const { return vectors_.size(); }

    bool operator==(const SuperBasis&) const = default;

private:
    Profile profile_;
    std::vector<BasisVector> vectors_;
};

/// e_1..e_{m+n}; e_i has weight eps_i and parity 0 iff i <= m.
inline SuperBasis standard_superspace(const Profile& profile)
{
    std::vector<BasisVector> vs;
    for (int i = 0; i < profile.vars(); ++i) {
        std::vector<int> w(static_cast<std::size_t>(profile.vars()), 0);
        w[static_cast<std::size_t>(i)] = 1;
        vs.push_back({Weight(profile.m(), std::move(w)), i < profile.m() ? 0 : 1});
    }
    return SuperBasis(profile, std::move(vs));
}

inline SuperBasis dual_superspace(const SuperBasis& v)
{
    std::vector<BasisVector> vs;
    for (const BasisVector& b : v.vectors()) {
        vs.push_back({-b.weight, b.parity});
    }
    return SuperBasis(v.profile(), std::move(vs));
}

inline SuperBasis direct_sum(const SuperBasis& a, const SuperBasis& b)
{
    if (!(a.profile() == b.profile())) {
        throw ProfileMismatch("direct sum of bases with different profiles");
    }
    std::vector<BasisVector> vs = a.vectors();
    vs.insert(vs.end(), b.vectors().begin(), b.vectors().end());
    return SuperBasis(a.profile(), std::move(vs));
}

inline LaurentPolynomial weight_monomial(const Profile& profile, const Weight& w, const Rational& c = 1)
{
    return LaurentPolynomial::monomial(profile, w.entries(), c);
}

/// sum over the basis of (-1)^parity x^weight.
inline LaurentPolynomial supercharacter(const SuperBasis& v)
{
    LaurentPolynomial out(v.profile());
    for (const BasisVector& b : v.vectors()) {
        out.add_term(b.weight.entries(), b.parity == 0 ? 1 : -1);
    }
    return out;
}

/// prod_even (1 + x^w t) * prod_odd (1 + x^w t)^{-1}, truncated at cap.
inline TruncatedSeries exterior_series(const SuperBasis& v, int cap)
{
    const Profile& profile = v.profile();
    TruncatedSeries acc = TruncatedSeries::one(profile, cap);
    const LaurentPolynomial one = LaurentPolynomial::one(profile);
    for (const BasisVector& b : v.vectors()) {
        const LaurentPolynomial mono = weight_monomial(profile, b.weight);
        const TruncatedSeries factor =
            b.parity == 0 ? TruncatedSeries::linear(one, mono, cap) : TruncatedSeries::geometric(-mono, cap);
        acc = series_mul(acc, factor);
    }
    return acc;
}

/// prod_even (1 - x^w t)^{-1} * prod_odd (1 - x^w t), truncated at cap.
inline TruncatedSeries symmetric_series(const SuperBasis& v, int cap)
{
    const Profile& profile = v.profile();
    TruncatedSeries acc = TruncatedSeries::one(profile, cap);
    const LaurentPolynomial one = LaurentPolynomial::one(profile);
    for (const BasisVector& b : v.vectors()) {
        const LaurentPolynomial mono = weight_monomial(profile, b.weight);
        const TruncatedSeries factor =
            b.parity == 0 ? TruncatedSeries::geometric(mono, cap) : TruncatedSeries::linear(one, -mono, cap);
        acc = series_mul(acc, factor);
    }
    return acc;
}

inline LaurentPolynomial exterior_power_char(const SuperBasis& v, int r)
{
    if (r < 0) {
        throw std::invalid_argument("exterior power degree must be nonnegative");
    }
    return exterior_series(v, r)[r];
}

inline LaurentPolynomial symmetric_power_char(const SuperBasis& v, int r)
{
    if (r < 0) {
        throw std::invalid_argument("symmetric power degree must be nonnegative");
    }
    return symmetric_series(v, r)[r];
}

/// Supercharacter of the simple GL(1|1)-module L(i | r-i) in characteristic p
/// (p = 0 for characteristic zero).
///
/// If p | r the module is even and one-dimensional; otherwise it is
/// two-dimensional with an odd vector of weight (i-1 | r-i+1).
inline LaurentPolynomial gl11_simple_char(int i, int r, std::uint32_t p)
{
    if (r < 0) {
        throw std::invalid_argument("r must be nonnegative");
    }
    const Profile profile(1, 1, p == 0 ? std::nullopt : std::optional<std::uint32_t>(p));
    const bool divides = r == 0 || (p != 0 && r % static_cast<int>(p) == 0);
    const int lo = divides ? 0 : 1;
    if (i < lo || i > r) {
        throw std::out_of_range("i=" + std::to_string(i) + " outside [" + std::to_string(lo) + ", " + std::to_string(r) +
                                "] for r=" + std::to_string(r) + ", p=" + std::to_string(p));
    }
    LaurentPolynomial out = LaurentPolynomial::monomial(profile, {i, r - i});
    if (!divides) {
        out.add_term({i - 1, r - i + 1}, -1);
    }
    return out;
}

inline Weight exponent_weight(const Profile& profile, const Exponents& e) { return Weight(profile.m(), e); }

/// Support weights of f that are maximal in the dominance order, with their coefficients.
inline std::vector<std::pair<Weight, Rational>> leading_summands(const LaurentPolynomial& f)
{
    if (f.is_zero()) {
        throw std::invalid_argument("zero polynomial has no leading summand");
    }
    std::vector<Weight> support;
    for (const auto& [e, c] : f.terms()) {
        support.push_back(exponent_weight(f.profile(), e));
    }
    std::vector<std::pair<Weight, Rational>> out;
    for (const Weight& w : maximal_elements(support)) {
        out.emplace_back(w, f.coefficient(w.entries()));
    }
    return out;
}

inline bool has_unique_leading(const LaurentPolynomial& f) { return leading_summands(f).size() == 1; }

// Sign combinatorics on multi-indices.

/// Tuple (i_1..i_r) with entries in 1..m+n; entries <= m are even, the rest odd.
class MultiIndex {
public:
    MultiIndex(int m, int n, std::vector<int> entries) : m_(m), n_(n), entries_(std::move(entries))
    {
        for (int i : entries_) {
            if (i < 1 || i > m + n) {
                throw std::out_of_range("multi-index entry " + std::to_string(i) + " outside 1.." +
                                        std::to_string(m + n));
            }
        }
    }

    int m() const { return m_; }
    int n() const { return n_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](std::size_t k) const { return entries_[k]; }

    int parity_at(std::size_t k) const { return entries_[k] > m_ ? 1 : 0; }

    /// |I| = sum of entry parities mod 2.
    int parity() const
    {
        int s = 0;
        for (std::size_t k = 0; k < size(); ++k) {
            s += parity_at(k);
        }
        return s % 2;
    }

    bool operator==(const MultiIndex&) const = default;

private:
    int m_;
    int n_;
    std::vector<int> entries_;
};

/// sigma as 0-based images: sigma[k] = sigma(k+1) - 1.
using Permutation = std::vector<int>;

inline bool is_permutation(const Permutation& sigma)
{
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != static_cast<int>(k)) {
            return false;
        }
    }
    return true;
}

/// (sigma tau)(k) = sigma(tau(k)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau)
{
    Permutation out(tau.size());
    for (std::size_t k = 0; k < tau.size(); ++k) {
        out[k] = sigma[static_cast<std::size_t>(tau[k])];
    }
    return out;
}

inline std::vector<Permutation> all_permutations(int r)
{
    Permutation sigma(static_cast<std::size_t>(r));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

namespace detail {

inline void require_permutation_of(const Permutation& sigma, std::size_t r)
{
    if (sigma.size() != r || !is_permutation(sigma)) {
        throw std::invalid_argument("permutation does not match the index length");
    }
}

/// Inversions (k < l, sigma(k) > sigma(l)) whose entries I_{sigma(k)}, I_{sigma(l)} both have the given parity.
inline int inversions_of_parity(const MultiIndex& I, const Permutation& sigma, int parity)
{
    require_permutation_of(sigma, I.size());
    int count = 0;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        for (std::size_t l = k + 1; l < sigma.size(); ++l) {
            const auto a = static_cast<std::size_t>(sigma[k]);
            const auto b = static_cast<std::size_t>(sigma[l]);
            if (a > b && I.parity_at(a) == parity && I.parity_at(b) == parity) {
                ++count;
            }
        }
    }
    return count;
}

} // namespace detail

/// I sigma = (i_{sigma(1)}, .., i_{sigma(r)}).
inline MultiIndex permuted(const MultiIndex& I, const Permutation& sigma)
{
    detail::require_permutation_of(sigma, I.size());
    std::vector<int> out(I.size());
    for (std::size_t k = 0; k < I.size(); ++k) {
        out[k] = I[static_cast<std::size_t>(sigma[k])];
    }
    return MultiIndex(I.m(), I.n(), std::move(out));
}

/// s(I, J) = sum_t |i_t| (sum_{s<t} |i_s| + |j_s|) mod 2. With `flipped`
/// every index parity is reversed first (the parity-changed space E^c).
inline int sign_s(const MultiIndex& I, const MultiIndex& J, bool flipped = false)
{
    if (I.size() != J.size()) {
        throw std::invalid_argument("multi-indices of different lengths");
    }
    const int f = flipped ? 1 : 0;
    int acc = 0;
    int before = 0;
    for (std::size_t t = 0; t < I.size(); ++t) {
        acc += (I.parity_at(t) ^ f) * before;
        before += (I.parity_at(t) ^ f) + (J.parity_at(t) ^ f);
    }
    return acc % 2;
}

/// s(I, sigma): odd-odd inversions.
inline int sign_s_star(const MultiIndex& I, const Permutation& sigma) { return detail::inversions_of_parity(I, sigma, 1); }

/// s'(I, sigma): even-even inversions.
inline int sign_s_circ(const MultiIndex& I, const Permutation& sigma) { return detail::inversions_of_parity(I, sigma, 0); }

/// Which parities enter s(I, J) in x_{IJ} = (-1)^{s(I,J)} c_{IJ}.
enum class Convention {
    Standard,     ///< parities of E
    ParityChanged ///< parities of E^c; the symbols c_ij keep parity |i| + |j| either way
};

/// sign * x_{row,col}, where x_{IJ} = (-1)^{s(I,J)} c_{IJ} and c_{IJ} = prod_k c_{i_k j_k}
/// in the supercommutative algebra on symbols c_ij of parity |i| + |j|.
struct SignedMonomialWord {
    MultiIndex row;
    MultiIndex col;
    int sign = 1;
    Convention convention = Convention::Standard;

    SignedMonomialWord(MultiIndex r, MultiIndex c, int s = 1, Convention conv = Convention::Standard)
        : row(std::move(r)), col(std::move(c)), sign(s), convention(conv)
    {
        if (row.size() != col.size()) {
            throw std::invalid_argument("row and column indices differ in length");
        }
        if (sign != 1 && sign != -1) {
            throw std::invalid_argument("word sign must be +1 or -1");
        }
    }

    bool operator==(const SignedMonomialWord&) const = default;
};

/// sign * c_{a_1 b_1} ... c_{a_r b_r} with factors sorted; coefficient 0 when an
/// odd symbol repeats.
struct CanonicalWord {
    int coefficient;
    std::vector<std::pair<int, int>> factors;

    bool operator==(const CanonicalWord&) const = default;
};

inline CanonicalWord canonical(const SignedMonomialWord& w)
{
    int sign = w.sign * (sign_s(w.row, w.col, w.convention == Convention::ParityChanged) ? -1 : 1);
    std::vector<std::pair<int, int>> factors;
    std::vector<int> parity;
    for (std::size_t k = 0; k < w.row.size(); ++k) {
        factors.emplace_back(w.row[k], w.col[k]);
        parity.push_back((w.row.parity_at(k) + w.col.parity_at(k)) % 2);
    }
    // Stable insertion sort; moving an odd factor past another odd factor flips the sign.
    for (std::size_t k = 1; k < factors.size(); ++k) {
        for (std::size_t l = k; l > 0 && factors[l] < factors[l - 1]; --l) {
            if (parity[l] == 1 && parity[l - 1] == 1) {
                sign = -sign;
            }
            std::swap(factors[l], factors[l - 1]);
            std::swap(parity[l], parity[l - 1]);
        }
    }
    for (std::size_t k = 1; k < factors.size(); ++k) {
        if (parity[k] == 1 && factors[k] == factors[k - 1]) {
            return {0, {}};
        }
    }
    return {sign, std::move(factors)};
}

/// Same element of K[G] (not merely the same representation).
inline bool equivalent(const SignedMonomialWord& a, const SignedMonomialWord& b) { return canonical(a) == canonical(b); }

enum class Side { Row, Col };

namespace detail {

inline SignedMonomialWord act(const SignedMonomialWord& w, const Permutation& sigma, Side side, int parity)
{
    const MultiIndex& target = side == Side::Row ? w.row : w.col;
    const int flips = inversions_of_parity(target, sigma, parity);
    const int sign = flips % 2 ? -w.sign : w.sign;
    if (side == Side::Row) {
        return SignedMonomialWord(permuted(w.row, sigma), w.col, sign, w.convention);
    }
    return SignedMonomialWord(w.row, permuted(w.col, sigma), sign, w.convention);
}

} // namespace detail

/// x_{I J*sigma} = (-1)^{s(J,sigma)} x_{I J sigma} (or the row-side analogue).
inline SignedMonomialWord star_action(const SignedMonomialWord& w, const Permutation& sigma, Side side)
{
    return detail::act(w, sigma, side, 1);
}

/// x_{I J o sigma} = (-1)^{s'(J,sigma)} x_{I J sigma} (or the row-side analogue).
inline SignedMonomialWord circ_action(const SignedMonomialWord& w, const Permutation& sigma, Side side)
{
    return detail::act(w, sigma, side, 0);
}

/// Image under c_ij -> delta_ij x_i (or x_i^{-1} for the dual coefficients c*_ij).
inline LaurentPolynomial torus_image(const SignedMonomialWord& w, const Profile& profile, bool dual = false)
{
    LaurentPolynomial out(profile);
    Exponents e(static_cast<std::size_t>(profile.vars()), 0);
    for (std::size_t k = 0; k < w.row.size(); ++k) {
        if (w.row[k] != w.col[k]) {
            return out;
        }
        e[static_cast<std::size_t>(w.row[k] - 1)] += dual ? -1 : 1;
    }
    // Only even diagonal symbols survive, so no reordering signs arise.
    const int sign = w.sign * (sign_s(w.row, w.col, w.convention == Convention::ParityChanged) ? -1 : 1);
    out.add_term(e, sign);
    return out;
}

namespace detail {

/// Even part strictly (strict_even) or weakly increasing in 1..m, followed by
/// odd part weakly or strictly (strict_odd) increasing in m+1..m+n.
inline std::vector<MultiIndex> split_indices(int m, int n, int r, bool strict_even, bool strict_odd)
{
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo, int hi, int len, bool strict, auto&& next) -> void {
        if (len == 0) {
            next();
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            cur.push_back(v);
            self(self, strict ? v + 1 : v, hi, len - 1, strict, next);
            cur.pop_back();
        }
    };
    for (int k = 0; k <= r; ++k) {
        rec(rec, 1, m, k, strict_even, [&] {
            rec(rec, m + 1, m + n, r - k, strict_odd, [&] { out.emplace_back(m, n, cur); });
        });
    }
    return out;
}

} // namespace detail

/// LI(r): i_1 < .. < i_k <= m < j_{k+1} <= .. <= j_r.
inline std::vector<MultiIndex> exterior_indices(int m, int n, int r) { return detail::split_indices(m, n, r, true, false); }

/// SI(r): i_1 <= .. <= i_k <= m < j_{k+1} < .. < j_r.
inline std::vector<MultiIndex> symmetric_indices(int m, int n, int r) { return detail::split_indices(m, n, r, false, true); }

namespace detail {

inline LaurentPolynomial coset_supertrace(const Profile& profile, int r, bool exterior, bool dual)
{
    if (r < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    LaurentPolynomial out(profile);
    const auto perms = all_permutations(r);
    const auto indices = exterior ? exterior_indices(profile.m(), profile.n(), r)
                                  : symmetric_indices(profile.m(), profile.n(), r);
    for (const MultiIndex& I : indices) {
        // Right cosets Stab(I) sigma are labelled by the tuple I sigma.
        std::set<std::vector<int>> seen;
        LaurentPolynomial inner(profile);
        for (const Permutation& sigma : perms) {
            if (!seen.insert(permuted(I, sigma).entries()).second) {
                continue;
            }
            const SignedMonomialWord base(I, I);
            const SignedMonomialWord w =
                exterior ? circ_action(base, sigma, Side::Row) : star_action(base, sigma, Side::Row);
            inner += torus_image(w, profile, dual);
        }
        out += I.parity() ? -inner : inner;
    }
    return out;
}

} // namespace detail

/// Torus image of Tr(Lambda^r(E)) summed over LI(r) and Stab(I)\S_r with the circ action.
/// Factorial cost; meant as an independent check of exterior_power_char.
inline LaurentPolynomial exterior_supertrace_by_cosets(const Profile& profile, int r)
{
    return detail::coset_supertrace(profile, r, true, false);
}

/// Torus image of Tr(S^r(E)) (or Tr(S^r(E*)) when dual) over SI(r) with the star action.
inline LaurentPolynomial symmetric_supertrace_by_cosets(const Profile& profile, int r, bool dual = false)
{
    return detail::coset_supertrace(profile, r, false, dual);
}

} // namespace supersym

#endif
