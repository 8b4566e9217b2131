#ifndef SUPERSYM_JSON_IO_HPP
#define SUPERSYM_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "laurent.hpp"

namespace supersym {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"m":..,"n":..,"p":..|null,"terms":[{"e":[..],"c":".."},..]} in canonical term order.
inline Json to_json(const LaurentPolynomial& f)
{
    Json doc;
    doc["m"] = f.profile().m();
    doc["n"] = f.profile().n();
    if (f.profile().p()) {
        doc["p"] = *f.profile().p();
    } else {
        doc["p"] = nullptr;
    }
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json term;
        term["e"] = e;
        term["c"] = format_rational(c);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

inline std::string serialize(const LaurentPolynomial& f) { return to_json(f).dump(); }

namespace detail {

inline int require_int(const Json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw FormatError(std::string("field '") + key + "' must be an integer");
    }
    return doc[key].get<int>();
}

} // namespace detail

inline LaurentPolynomial polynomial_from_json(const Json& doc)
{
    if (!doc.is_object()) {
        throw FormatError("polynomial document must be a JSON object");
    }
    const int m = detail::require_int(doc, "m");
    const int n = detail::require_int(doc, "n");
    std::optional<std::uint32_t> p;
    if (doc.contains("p") && !doc["p"].is_null()) {
        if (!doc["p"].is_number_integer() || doc["p"].get<long long>() < 2 ||
            !is_prime(doc["p"].get<std::uint64_t>()) || doc["p"].get<std::uint64_t>() > 0xFFFFFFFFULL) {
            throw FormatError("field 'p' must be null or a prime");
        }
        p = doc["p"].get<std::uint32_t>();
    }
    if (m < 1 || n < 1) {
        throw FormatError("m and n must be positive");
    }
    const Profile profile(m, n, p);
    if (!doc.contains("terms") || !doc["terms"].is_array()) {
        throw FormatError("field 'terms' must be an array");
    }
    LaurentPolynomial f(profile);
    std::set<Exponents> seen;
    for (const auto& term : doc["terms"]) {
        if (!term.is_object() || !term.contains("e") || !term.contains("c") || !term["e"].is_array() ||
            !term["c"].is_string()) {
            throw FormatError("each term needs an integer array 'e' and a string 'c'");
        }
        Exponents e;
        for (const auto& v : term["e"]) {
            if (!v.is_number_integer()) {
                throw FormatError("exponents must be integers");
            }
            e.push_back(v.get<int>());
        }
        if (static_cast<int>(e.size()) != profile.vars()) {
            throw FormatError("exponent vector of length " + std::to_string(e.size()) + ", expected " +
                              std::to_string(profile.vars()));
        }
        if (!seen.insert(e).second) {
            throw FormatError("duplicate exponent vector");
        }
        Rational c;
        try {
            c = profile.field().reduce(parse_rational(term["c"].get<std::string>()));
        } catch (const std::exception& ex) {
            throw FormatError(ex.what());
        }
        if (c == 0) {
            throw FormatError("zero coefficient present");
        }
        f.add_term(e, c);
    }
    return f;
}

/// Parses the canonical polynomial format; throws FormatError on any schema violation.
inline LaurentPolynomial parse_polynomial(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw FormatError(std::string("malformed JSON: ") + ex.what());
    }
    return polynomial_from_json(doc);
}

} // namespace supersym

#endif
