#pragma once

#include <charconv>
#include <compare>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace mrpot {

/// Radial quantum number n and orbital quantum number l.
struct quantum_state
{
    int n = 0;
    int l = 0;

    /// Principal quantum number N = n + l + 1.
    int principal() const noexcept { return n + l + 1; }

    friend auto operator<=>(quantum_state const&, quantum_state const&) = default;
};

namespace detail {

// 'j' is skipped by spectroscopic convention
inline constexpr std::string_view orbital_letters = "spdfghiklmnoqrtuv";

} // namespace detail

inline char orbital_letter(int l)
{
    if (l < 0 || l >= static_cast<int>(detail::orbital_letters.size())) {
        throw domain_error("orbital_letter: l out of range");
    }
    return detail::orbital_letters[static_cast<std::size_t>(l)];
}

/// "2p" for n = 0, l = 1.
inline std::string spectroscopic_label(quantum_state const& s)
{
    return std::to_string(s.principal()) + orbital_letter(s.l);
}

/// Inverse of spectroscopic_label: "6g" -> n = 1, l = 4.
inline quantum_state parse_state_label(std::string_view label)
{
    if (label.size() < 2) throw parse_error("bad state label '" + std::string(label) + "'");
    int N = 0;
    auto const digits = label.substr(0, label.size() - 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), N);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw parse_error("bad state label '" + std::string(label) + "'");
    }
    auto const pos = detail::orbital_letters.find(label.back());
    if (pos == std::string_view::npos) {
        throw parse_error("bad orbital letter in '" + std::string(label) + "'");
    }
    int const l = static_cast<int>(pos);
    int const n = N - l - 1;
    if (n < 0) throw parse_error("state '" + std::string(label) + "' has N <= l");
    return {n, l};
}

} // namespace mrpot
