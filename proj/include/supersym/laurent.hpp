#ifndef SUPERSYM_LAURENT_HPP
#define SUPERSYM_LAURENT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "profile.hpp"
#include "scalar.hpp"

namespace supersym {

/// Exponents of x_1..x_m followed by y_1..y_n; entries may be negative.
using Exponents = std::vector<int>;

class ProfileMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sparse Laurent polynomial in x_1..x_m, y_1..y_n over Q or F_p.
///
/// Terms live in a std::map keyed by the exponent vector, so iteration is in
/// lexicographic order and no zero coefficient is ever stored.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponents, Rational>;

    explicit LaurentPolynomial(Profile profile) : profile_(std::move(profile)) {}

    static LaurentPolynomial constant(const Profile& profile, const Rational& c)
    {
        LaurentPolynomial f(profile);
        f.add_term(Exponents(profile.vars(), 0), c);
        return f;
    }

    static LaurentPolynomial one(const Profile& profile) { return constant(profile, 1); }

    static LaurentPolynomial monomial(const Profile& profile, Exponents e, const Rational& c = 1)
    {
        LaurentPolynomial f(profile);
        f.add_term(e, c);
        return f;
    }

    /// x_i, 1-based.
    static LaurentPolynomial x(const Profile& profile, int i)
    {
        if (i < 1 || i > profile.m()) {
            throw std::out_of_range("x index " + std::to_string(i) + " out of range");
        }
        Exponents e(profile.vars(), 0);
        e[i - 1] = 1;
        return monomial(profile, std::move(e));
    }

    /// y_j, 1-based.
    static LaurentPolynomial y(const Profile& profile, int j)
    {
        if (j < 1 || j > profile.n()) {
            throw std::out_of_range("y index " + std::to_string(j) + " out of range");
        }
        Exponents e(profile.vars(), 0);
        e[profile.m() + j - 1] = 1;
        return monomial(profile, std::move(e));
    }

    const Profile& profile() const { return profile_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponents& e) const
    {
        const auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulates c into the term with exponent e, dropping it if it cancels.
    void add_term(const Exponents& e, const Rational& c)
    {
        if (static_cast<int>(e.size()) != profile_.vars()) {
            throw std::invalid_argument("exponent vector has length " + std::to_string(e.size()) +
                                        ", expected " + std::to_string(profile_.vars()));
        }
        const Field& field = profile_.field();
        const Rational value = field.reduce(c);
        if (value == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, value);
        if (!inserted) {
            it->second = field.add(it->second, value);
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// Total degree if every term has the same one; nullopt for zero or mixed degrees.
    std::optional<int> homogeneous_degree() const
    {
        std::optional<int> degree;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int v : e) {
                d += v;
            }
            if (degree && *degree != d) {
                return std::nullopt;
            }
            degree = d;
        }
        return degree;
    }

    bool is_polynomial() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) {
            return std::all_of(term.first.begin(), term.first.end(), [](int v) { return v >= 0; });
        });
    }

    LaurentPolynomial scaled(const Rational& s) const
    {
        LaurentPolynomial out(profile_);
        for (const auto& [e, c] : terms_) {
            out.add_term(e, c * s);
        }
        return out;
    }

    LaurentPolynomial operator-() const { return scaled(-1); }

    LaurentPolynomial& operator+=(const LaurentPolynomial& g)
    {
        require_same_profile(g);
        for (const auto& [e, c] : g.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& g)
    {
        require_same_profile(g);
        for (const auto& [e, c] : g.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial f, const LaurentPolynomial& g) { return f += g; }
    friend LaurentPolynomial operator-(LaurentPolynomial f, const LaurentPolynomial& g) { return f -= g; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g)
    {
        f.require_same_profile(g);
        LaurentPolynomial out(f.profile_);
        Exponents e(f.profile_.vars());
        for (const auto& [ef, cf] : f.terms_) {
            for (const auto& [eg, cg] : g.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) {
                    e[k] = ef[k] + eg[k];
                }
                out.add_term(e, cf * cg);
            }
        }
        return out;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& g) { return *this = *this * g; }

    friend bool operator==(const LaurentPolynomial& f, const LaurentPolynomial& g)
    {
        return f.profile_ == g.profile_ && f.terms_ == g.terms_;
    }

    void require_same_profile(const LaurentPolynomial& g) const
    {
        if (!(profile_ == g.profile_)) {
            throw ProfileMismatch("profile mismatch: " + profile_.describe() + " vs " + g.profile_.describe());
        }
    }

private:
    Profile profile_;
    TermMap terms_;
};

inline LaurentPolynomial pow(const LaurentPolynomial& f, unsigned k)
{
    LaurentPolynomial result = LaurentPolynomial::one(f.profile());
    LaurentPolynomial base = f;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

/// The summand of f with exponent vector e (possibly zero).
inline LaurentPolynomial homogeneous_component(const LaurentPolynomial& f, const Exponents& e)
{
    LaurentPolynomial out(f.profile());
    const Rational c = f.coefficient(e);
    if (c != 0) {
        out.add_term(e, c);
    }
    return out;
}

template <class Fn>
LaurentPolynomial map_exponents(const LaurentPolynomial& f, Fn&& fn)
{
    LaurentPolynomial out(f.profile());
    for (const auto& [e, c] : f.terms()) {
        out.add_term(fn(e), c);
    }
    return out;
}

/// Substitutes x_i -> x_i^{-1}, y_j -> y_j^{-1}.
inline LaurentPolynomial invert_variables(const LaurentPolynomial& f)
{
    return map_exponents(f, [](Exponents e) {
        for (int& v : e) {
            v = -v;
        }
        return e;
    });
}

/// Inverse of a single-term polynomial; throws for anything else.
inline LaurentPolynomial inverse_monomial(const LaurentPolynomial& f)
{
    if (f.size() != 1) {
        throw std::invalid_argument("only monomials are units of the Laurent ring");
    }
    const auto& [e, c] = *f.terms().begin();
    Exponents inv = e;
    for (int& v : inv) {
        v = -v;
    }
    return LaurentPolynomial::monomial(f.profile(), inv, f.profile().field().inverse(c));
}

/// f^k for any integer k; negative k requires f to be a monomial.
inline LaurentPolynomial integer_pow(const LaurentPolynomial& f, int k)
{
    return k >= 0 ? pow(f, static_cast<unsigned>(k)) : pow(inverse_monomial(f), static_cast<unsigned>(-k));
}

/// Reinterprets integer-coefficient f over F_p (or any other characteristic).
inline LaurentPolynomial change_characteristic(const LaurentPolynomial& f, std::optional<std::uint32_t> p)
{
    LaurentPolynomial out(f.profile().with_characteristic(p));
    for (const auto& [e, c] : f.terms()) {
        out.add_term(e, c);
    }
    return out;
}

inline std::string variable_name(const Profile& profile, int k)
{
    return k < profile.m() ? "x" + std::to_string(k + 1) : "y" + std::to_string(k - profile.m() + 1);
}

/// Human-readable form, e.g. "x1^2 - 2*x1*y1 + y1^-1".
inline std::string to_string(const LaurentPolynomial& f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    // Highest exponent vector first reads more naturally.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (int k = 0; k < f.profile().vars(); ++k) {
            if (e[k] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += variable_name(f.profile(), k);
            if (e[k] != 1) {
                mono += '^' + std::to_string(e[k]);
            }
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string coeff = format_rational(mag);
        if (!first) {
            out += negative ? " - " : " + ";
        } else if (negative) {
            out += '-';
        }
        if (mono.empty()) {
            out += coeff;
        } else if (mag == 1) {
            out += mono;
        } else {
            out += coeff + '*' + mono;
        }
        first = false;
    }
    return out;
}

/// Univariate Laurent polynomial in an auxiliary variable t whose coefficients
/// are Laurent polynomials in the remaining variables.
class TPolynomial {
public:
    explicit TPolynomial(Profile profile) : profile_(std::move(profile)) {}

    const Profile& profile() const { return profile_; }
    const std::map<int, LaurentPolynomial>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LaurentPolynomial coefficient(int degree) const
    {
        const auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? LaurentPolynomial(profile_) : it->second;
    }

    void add(int degree, const LaurentPolynomial& c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = coeffs_.try_emplace(degree, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                coeffs_.erase(it);
            }
        }
    }

    friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

private:
    Profile profile_;
    std::map<int, LaurentPolynomial> coeffs_;
};

/// f with x_i = y_j = t; other variables stay in the coefficients. i, j are 1-based.
inline TPolynomial substitute_diag(const LaurentPolynomial& f, int i, int j)
{
    const Profile& profile = f.profile();
    if (i < 1 || i > profile.m() || j < 1 || j > profile.n()) {
        throw std::out_of_range("diagonal substitution index out of range");
    }
    const std::size_t xi = static_cast<std::size_t>(i - 1);
    const std::size_t yj = static_cast<std::size_t>(profile.m() + j - 1);
    TPolynomial out(profile);
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        const int degree = rest[xi] + rest[yj];
        rest[xi] = 0;
        rest[yj] = 0;
        out.add(degree, LaurentPolynomial::monomial(profile, rest, c));
    }
    return out;
}

/// Formal d/dt; the factor k is taken in the coefficient field.
inline TPolynomial derivative_t(const TPolynomial& g)
{
    TPolynomial out(g.profile());
    for (const auto& [k, c] : g.coefficients()) {
        out.add(k - 1, c.scaled(k));
    }
    return out;
}

/// Power series in t truncated after t^cap, coefficients in the Laurent ring.
class TruncatedSeries {
public:
    TruncatedSeries(Profile profile, int cap) : profile_(profile), coeffs_()
    {
        if (cap < 0) {
            throw std::invalid_argument("series cap must be nonnegative");
        }
        coeffs_.assign(static_cast<std::size_t>(cap) + 1, LaurentPolynomial(profile));
    }

    static TruncatedSeries one(const Profile& profile, int cap)
    {
        TruncatedSeries s(profile, cap);
        s.coeffs_[0] = LaurentPolynomial::one(profile);
        return s;
    }

    /// c0 + c1*t.
    static TruncatedSeries linear(const LaurentPolynomial& c0, const LaurentPolynomial& c1, int cap)
    {
        c0.require_same_profile(c1);
        TruncatedSeries s(c0.profile(), cap);
        s.coeffs_[0] = c0;
        if (cap >= 1) {
            s.coeffs_[1] = c1;
        }
        return s;
    }

    /// sum_k v^k t^k = (1 - v t)^{-1}.
    static TruncatedSeries geometric(const LaurentPolynomial& v, int cap)
    {
        TruncatedSeries s(v.profile(), cap);
        LaurentPolynomial power = LaurentPolynomial::one(v.profile());
        for (int k = 0; k <= cap; ++k) {
            s.coeffs_[static_cast<std::size_t>(k)] = power;
            if (k < cap) {
                power *= v;
            }
        }
        return s;
    }

    const Profile& profile() const { return profile_; }
    int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<LaurentPolynomial>& coefficients() const { return coeffs_; }
    const LaurentPolynomial& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    void set(int k, LaurentPolynomial c)
    {
        c.require_same_profile(coeffs_.front());
        coeffs_.at(static_cast<std::size_t>(k)) = std::move(c);
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    Profile profile_;
    std::vector<LaurentPolynomial> coeffs_;
};

/// Cauchy product truncated at the common cap.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.cap() != b.cap()) {
        throw std::invalid_argument("series cap mismatch");
    }
    if (!(a.profile() == b.profile())) {
        throw ProfileMismatch("series profile mismatch");
    }
    TruncatedSeries out(a.profile(), a.cap());
    for (int k = 0; k <= a.cap(); ++k) {
        LaurentPolynomial acc(a.profile());
        for (int i = 0; i <= k; ++i) {
            if (a[i].is_zero() || b[k - i].is_zero()) {
                continue;
            }
            acc += a[i] * b[k - i];
        }
        out.set(k, std::move(acc));
    }
    return out;
}

} // namespace supersym

#endif
