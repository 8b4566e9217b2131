#ifndef SUPERSYM_SCALAR_HPP
#define SUPERSYM_SCALAR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace supersym {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_prime(std::uint64_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

/// Bit length of numerator plus bit length of denominator; used to rank pivots.
inline std::size_t bit_size(const Rational& q)
{
    const Integer num = abs(boost::multiprecision::numerator(q));
    const Integer den = boost::multiprecision::denominator(q);
    std::size_t bits = 0;
    if (num != 0) {
        bits += boost::multiprecision::msb(num) + 1;
    }
    bits += boost::multiprecision::msb(den) + 1;
    return bits;
}

/// Decimal integer or reduced "a/b" with positive denominator.
inline std::string format_rational(const Rational& q)
{
    const Integer den = boost::multiprecision::denominator(q);
    std::string out = boost::multiprecision::numerator(q).str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

namespace detail {

inline bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Parses "a" or "a/b" (b nonzero). Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!detail::is_decimal_integer(num)) {
        throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
    }
    Integer a(std::string(num.front() == '+' ? num.substr(1) : num));
    if (slash == std::string_view::npos) {
        return Rational(a);
    }
    const std::string_view den = text.substr(slash + 1);
    if (!detail::is_decimal_integer(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
    }
    Integer b{std::string(den)};
    if (b == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(a, b);
}

/// Coefficient field: the rationals, or the prime field F_p.
///
/// Elements of F_p are stored as integers in [0, p) inside a Rational so that
/// polynomial code is written once for both characteristics.
class Field {
public:
    Field() = default;

    explicit Field(std::optional<std::uint32_t> p) : p_(p)
    {
        if (p_ && !is_prime(*p_)) {
            throw std::invalid_argument("field characteristic " + std::to_string(*p_) + " is not prime");
        }
    }

    std::optional<std::uint32_t> prime() const { return p_; }
    std::uint32_t characteristic() const { return p_ ? *p_ : 0; }

    Rational reduce(const Rational& q) const
    {
        if (!p_) {
            return q;
        }
        const std::uint64_t num = residue(boost::multiprecision::numerator(q));
        const std::uint64_t den = residue(boost::multiprecision::denominator(q));
        if (den == 0) {
            throw std::domain_error("denominator divisible by the characteristic " + std::to_string(*p_));
        }
        return Rational(Integer(mulmod(num, invmod(den))));
    }

    Rational from_int(long long v) const { return reduce(Rational(v)); }

    Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
    Rational neg(const Rational& a) const { return reduce(-a); }

    Rational inverse(const Rational& a) const
    {
        if (a == 0) {
            throw std::domain_error("inverse of zero");
        }
        if (!p_) {
            return 1 / a;
        }
        return Rational(Integer(invmod(residue(boost::multiprecision::numerator(reduce(a))))));
    }

    bool operator==(const Field&) const = default;

private:
    std::uint64_t residue(const Integer& z) const
    {
        Integer r = z % *p_;
        if (r < 0) {
            r += *p_;
        }
        return r.convert_to<std::uint64_t>();
    }

    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const { return (a * b) % *p_; }

    std::uint64_t invmod(std::uint64_t a) const
    {
        // Fermat; p < 2^32 so products fit in 64 bits.
        std::uint64_t result = 1;
        std::uint64_t base = a % *p_;
        std::uint64_t e = *p_ - 2;
        while (e > 0) {
            if (e & 1U) {
                result = mulmod(result, base);
            }
            base = mulmod(base, base);
            e >>= 1U;
        }
        return result;
    }

    std::optional<std::uint32_t> p_;
};

} // namespace supersym

#endif
