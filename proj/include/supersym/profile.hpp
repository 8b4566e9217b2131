#ifndef SUPERSYM_PROFILE_HPP
#define SUPERSYM_PROFILE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "scalar.hpp"

namespace supersym {

/// Shape of GL(m|n) plus the coefficient characteristic (absent = 0).
class Profile {
public:
    Profile(int m, int n, std::optional<std::uint32_t> p = std::nullopt) : m_(m), n_(n), field_(p)
    {
        if (m < 1 || n < 1) {
            throw std::invalid_argument("profile needs m >= 1 and n >= 1, got m=" + std::to_string(m) +
                                        " n=" + std::to_string(n));
        }
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int vars() const { return m_ + n_; }
    std::optional<std::uint32_t> p() const { return field_.prime(); }
    const Field& field() const { return field_; }

    Profile with_characteristic(std::optional<std::uint32_t> p) const { return Profile(m_, n_, p); }

    bool operator==(const Profile&) const = default;

    std::string describe() const
    {
        std::string s = "GL(" + std::to_string(m_) + "|" + std::to_string(n_) + ")";
        if (p()) {
            s += " char " + std::to_string(*p());
        }
        return s;
    }

private:
    int m_;
    int n_;
    Field field_;
};

} // namespace supersym

#endif
