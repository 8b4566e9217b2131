#ifndef SUPERSYM_TEXT_IO_HPP
#define SUPERSYM_TEXT_IO_HPP

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "generators.hpp"
#include "weights.hpp"

namespace supersym {

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

inline int parse_int(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

inline std::vector<int> parse_int_list(std::string_view s)
{
    std::vector<int> out;
    s = trim(s);
    if (s.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

} // namespace detail

/// "1,0|0,-1", optionally wrapped in parentheses; the bar separates the blocks.
inline Weight parse_weight(std::string_view text)
{
    std::string_view s = detail::trim(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
    }
    const std::size_t bar = s.find('|');
    if (bar == std::string_view::npos || s.find('|', bar + 1) != std::string_view::npos) {
        throw std::invalid_argument("weight needs exactly one '|': '" + std::string(text) + "'");
    }
    std::vector<int> plus = detail::parse_int_list(s.substr(0, bar));
    const std::vector<int> minus = detail::parse_int_list(s.substr(bar + 1));
    if (plus.empty() || minus.empty()) {
        throw std::invalid_argument("both weight blocks must be nonempty: '" + std::string(text) + "'");
    }
    const int m = static_cast<int>(plus.size());
    plus.insert(plus.end(), minus.begin(), minus.end());
    return Weight(m, std::move(plus));
}

/// "c_3", "d2", "ber", "sigma_x_1", "u_1": kind name followed by an optional index.
inline GeneratorId parse_generator_id(std::string_view text)
{
    const std::string_view s = detail::trim(text);
    std::size_t split = s.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(s[split - 1]))) {
        --split;
    }
    GeneratorId id{parse_generator_kind(s.substr(0, split)), 0};
    if (split < s.size()) {
        id.index = detail::parse_int(s.substr(split));
    } else if (id.kind != GeneratorKind::Ber) {
        throw std::invalid_argument("generator '" + std::string(text) + "' needs an index");
    }
    return id;
}

/// Generator for a diagonal pair "w" (meaning (-w, w)) or an explicit "lower;upper".
inline WeightPair parse_weight_pair(std::string_view text)
{
    const std::size_t semi = text.find(';');
    if (semi == std::string_view::npos) {
        const Weight w = parse_weight(text);
        return {-w, w};
    }
    return {parse_weight(text.substr(0, semi)), parse_weight(text.substr(semi + 1))};
}

inline Cone parse_cone(std::string_view text)
{
    const std::string_view s = detail::trim(text);
    if (s == "all") return Cone::All;
    if (s == "dominant") return Cone::Dominant;
    if (s == "nonneg" || s == "dominant-nonneg") return Cone::DominantNonneg;
    throw std::invalid_argument("unknown cone '" + std::string(text) + "' (all, dominant, nonneg)");
}

} // namespace supersym

#endif
