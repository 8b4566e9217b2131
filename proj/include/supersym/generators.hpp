#ifndef SUPERSYM_GENERATORS_HPP
#define SUPERSYM_GENERATORS_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "laurent.hpp"
#include "supercharacters.hpp"
#include "weights.hpp"

namespace supersym {

enum class Block { X, Y };

namespace detail {

inline int block_offset(const Profile& profile, Block block) { return block == Block::X ? 0 : profile.m(); }
inline int block_size(const Profile& profile, Block block) { return block == Block::X ? profile.m() : profile.n(); }

} // namespace detail

/// sigma_i over one block of variables; sigma_0 = 1.
inline LaurentPolynomial elementary_sym(const Profile& profile, Block block, int i)
{
    const int size = detail::block_size(profile, block);
    const int offset = detail::block_offset(profile, block);
    if (i < 0 || i > size) {
        throw std::out_of_range("elementary symmetric index " + std::to_string(i) + " outside [0, " +
                                std::to_string(size) + "]");
    }
    LaurentPolynomial out(profile);
    Exponents e(static_cast<std::size_t>(profile.vars()), 0);
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            out.add_term(e, 1);
            return;
        }
        for (int v = start; v <= size - left; ++v) {
            e[static_cast<std::size_t>(offset + v)] = 1;
            self(self, v + 1, left - 1);
            e[static_cast<std::size_t>(offset + v)] = 0;
        }
    };
    rec(rec, 0, i);
    return out;
}

/// Complete homogeneous symmetric polynomial of degree j over one block; p_0 = 1.
inline LaurentPolynomial complete_sym(const Profile& profile, Block block, int j)
{
    if (j < 0) {
        throw std::invalid_argument("complete symmetric degree must be nonnegative");
    }
    const int size = detail::block_size(profile, block);
    const int offset = detail::block_offset(profile, block);
    LaurentPolynomial out(profile);
    Exponents e(static_cast<std::size_t>(profile.vars()), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == size - 1) {
            e[static_cast<std::size_t>(offset + var)] = left;
            out.add_term(e, 1);
            e[static_cast<std::size_t>(offset + var)] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(offset + var)] = k;
            self(self, var + 1, left - k);
        }
        e[static_cast<std::size_t>(offset + var)] = 0;
    };
    rec(rec, 0, j);
    return out;
}

/// c_r = sum_{0 <= i <= min(r, m)} (-1)^{r-i} sigma_i(x) p_{r-i}(y): the torus image of Tr(Lambda^r E).
inline LaurentPolynomial c_generator(const Profile& profile, int r)
{
    if (r < 0) {
        throw std::invalid_argument("c_r needs r >= 0");
    }
    LaurentPolynomial out(profile);
    for (int i = 0; i <= std::min(r, profile.m()); ++i) {
        const LaurentPolynomial term = elementary_sym(profile, Block::X, i) * complete_sym(profile, Block::Y, r - i);
        out += (r - i) % 2 ? -term : term;
    }
    return out;
}

/// d_r: torus image of Tr(S^r(E*)), from the symmetric-power generating function of the dual basis.
inline LaurentPolynomial d_generator(const Profile& profile, int r)
{
    if (r < 0) {
        throw std::invalid_argument("d_r needs r >= 0");
    }
    return symmetric_power_char(dual_superspace(standard_superspace(profile)), r);
}

/// The Berezinian character x_1..x_m / (y_1..y_n), weight (1^m | (-1)^n).
inline LaurentPolynomial berezinian_char(const Profile& profile)
{
    Exponents e(static_cast<std::size_t>(profile.vars()), 1);
    for (int j = 0; j < profile.n(); ++j) {
        e[static_cast<std::size_t>(profile.m() + j)] = -1;
    }
    return LaurentPolynomial::monomial(profile, e);
}

/// Exponents of the companion product for a dominant weight.
struct CompanionExponents {
    int berezinian;           ///< power of Ber (any sign)
    std::vector<int> ber_inv_d; ///< index s-1: power of Ber^{-1} d_s, s = 1..n-1
    int c_top;                ///< power of c_m
    std::vector<int> c_low;   ///< index t-1: power of c_t, t = 1..m-1
};

/// Ber^{-lambda_{m+n}} prod_s (Ber^{-1} d_s)^{lambda_{m+n-s} - lambda_{m+n-s+1}}
///   c_m^{lambda_m + lambda_{m+1}} prod_t c_t^{lambda_t - lambda_{t+1}}.
///
/// Leading weights add under multiplication, and with Ber at (1^m|(-1)^n),
/// d_s at (0^m|0^{n-s},(-1)^s), c_t at (1^t,0^{m-t}|0^n) these exponents sum to
/// exactly lambda.
inline CompanionExponents companion_exponents(const Weight& lambda)
{
    if (!in_cone(lambda, Cone::Dominant)) {
        throw std::invalid_argument("companion invariant needs a dominant weight, got " + to_string(lambda));
    }
    const int m = lambda.m();
    const int n = lambda.n();
    const auto at = [&](int k) { return lambda[static_cast<std::size_t>(k - 1)]; }; // 1-based
    CompanionExponents ex;
    ex.berezinian = -at(m + n);
    for (int s = 1; s <= n - 1; ++s) {
        ex.ber_inv_d.push_back(at(m + n - s) - at(m + n - s + 1));
    }
    ex.c_top = at(m) + at(m + 1);
    for (int t = 1; t <= m - 1; ++t) {
        ex.c_low.push_back(at(t) - at(t + 1));
    }
    if (ex.c_top < 0) {
        throw std::domain_error("companion product needs lambda_m + lambda_{m+1} >= 0, got " + to_string(lambda));
    }
    return ex;
}

/// Torus image of the companion invariant f_lambda; its unique leading weight is lambda.
inline LaurentPolynomial companion_image(const Profile& profile, const Weight& lambda)
{
    if (lambda.m() != profile.m() || lambda.n() != profile.n()) {
        throw std::invalid_argument("weight shape does not match the profile");
    }
    const CompanionExponents ex = companion_exponents(lambda);
    const LaurentPolynomial ber = berezinian_char(profile);
    LaurentPolynomial out = integer_pow(ber, ex.berezinian);
    const LaurentPolynomial ber_inv = inverse_monomial(ber);
    for (std::size_t s = 0; s < ex.ber_inv_d.size(); ++s) {
        if (ex.ber_inv_d[s] > 0) {
            out *= pow(ber_inv * d_generator(profile, static_cast<int>(s) + 1), static_cast<unsigned>(ex.ber_inv_d[s]));
        }
    }
    out *= pow(c_generator(profile, profile.m()), static_cast<unsigned>(ex.c_top));
    for (std::size_t t = 0; t < ex.c_low.size(); ++t) {
        if (ex.c_low[t] > 0) {
            out *= pow(c_generator(profile, static_cast<int>(t) + 1), static_cast<unsigned>(ex.c_low[t]));
        }
    }
    return out;
}

enum class GeneratorKind { C, D, Ber, SigmaX, SigmaY, HX, HY, U };

/// A named element of the Laurent ring.
struct GeneratorId {
    GeneratorKind kind;
    int index = 0;

    std::string label() const
    {
        switch (kind) {
        case GeneratorKind::C:
            return "c_" + std::to_string(index);
        case GeneratorKind::D:
            return "d_" + std::to_string(index);
        case GeneratorKind::Ber:
            return "ber";
        case GeneratorKind::SigmaX:
            return "sigma_x_" + std::to_string(index);
        case GeneratorKind::SigmaY:
            return "sigma_y_" + std::to_string(index);
        case GeneratorKind::HX:
            return "h_x_" + std::to_string(index);
        case GeneratorKind::HY:
            return "h_y_" + std::to_string(index);
        case GeneratorKind::U:
            return "u_" + std::to_string(index);
        }
        return "?";
    }

    bool operator==(const GeneratorId&) const = default;
};

/// Accepts the names printed by GeneratorId::label plus short forms: C3, D2, Ber, SigmaX1, U1.
inline GeneratorKind parse_generator_kind(std::string_view name)
{
    std::string s;
    for (char ch : name) {
        if (ch != '_' && ch != '-') {
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        }
    }
    if (s == "c") return GeneratorKind::C;
    if (s == "d") return GeneratorKind::D;
    if (s == "ber") return GeneratorKind::Ber;
    if (s == "sigmax") return GeneratorKind::SigmaX;
    if (s == "sigmay") return GeneratorKind::SigmaY;
    if (s == "hx") return GeneratorKind::HX;
    if (s == "hy") return GeneratorKind::HY;
    if (s == "u") return GeneratorKind::U;
    throw std::invalid_argument("unknown generator kind '" + std::string(name) + "'");
}

inline LaurentPolynomial make_generator(const Profile& profile, const GeneratorId& id)
{
    switch (id.kind) {
    case GeneratorKind::C:
        return c_generator(profile, id.index);
    case GeneratorKind::D:
        return d_generator(profile, id.index);
    case GeneratorKind::Ber:
        return berezinian_char(profile);
    case GeneratorKind::SigmaX:
        return elementary_sym(profile, Block::X, id.index);
    case GeneratorKind::SigmaY:
        return elementary_sym(profile, Block::Y, id.index);
    case GeneratorKind::HX:
        return complete_sym(profile, Block::X, id.index);
    case GeneratorKind::HY:
        return complete_sym(profile, Block::Y, id.index);
    case GeneratorKind::U: {
        if (!profile.p()) {
            throw std::invalid_argument("u_k needs a prime characteristic");
        }
        const int p = static_cast<int>(*profile.p());
        if (id.index <= 0 || id.index >= p) {
            throw std::out_of_range("u_k needs 0 < k < p");
        }
        return pow(elementary_sym(profile, Block::X, profile.m()), static_cast<unsigned>(id.index)) *
               pow(elementary_sym(profile, Block::Y, profile.n()), static_cast<unsigned>(p - id.index));
    }
    }
    throw std::invalid_argument("unknown generator kind");
}

} // namespace supersym

#endif
