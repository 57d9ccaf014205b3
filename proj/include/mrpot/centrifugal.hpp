#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace mrpot {

/// Closure used to pick one solution out of the two matching conditions.
enum class approx_case
{
    case1,  ///< c1 = c2 = 1, c0 from the value condition
    case2,  ///< c1 = 1, (c0, c2) from both conditions
    case3,  ///< c2 = 1, (c0, c1) from both conditions
    legacy, ///< (0, 1, 1), no matching
};

inline std::string_view to_string(approx_case c)
{
    switch (c) {
        case approx_case::case1: return "case1";
        case approx_case::case2: return "case2";
        case approx_case::case3: return "case3";
        case approx_case::legacy: return "legacy";
    }
    return "?";
}

inline approx_case parse_approx_case(std::string_view s)
{
    if (s == "case1") return approx_case::case1;
    if (s == "case2") return approx_case::case2;
    if (s == "case3") return approx_case::case3;
    if (s == "legacy") return approx_case::legacy;
    throw parse_error("unknown approximation scheme '" + std::string(s) + "'");
}

/// Exponential approximation of 1/r^2 around the matching radius r0 = gamma * b:
///
///   1/r^2 ~ (1/r0^2) [c0 + c1 / (e^{r/b} - 1) + c2 / (e^{r/b} - 1)^2]
///
/// The scheme only stores gamma; r0 follows once the screening length b is known.
struct approx_scheme
{
    double c0 = 0.0;
    double c1 = 1.0;
    double c2 = 1.0;
    double gamma = 1.0;
    approx_case kind = approx_case::legacy;

    double r0(double b) const noexcept { return gamma * b; }
};

namespace detail {

/// 1 / (e^x - 1) without cancellation for small x.
inline double inv_expm1(double x) noexcept { return 1.0 / std::expm1(x); }

} // namespace detail

/// Residuals of the value and slope matching conditions at r = r0.
struct matching_residuals
{
    double value; ///< c0 + c1/q + c2/q^2 - 1
    double slope; ///< gamma (c1/q + (c1 + 2 c2)/q^2 + 2 c2/q^3) - 2
};

inline matching_residuals residuals(approx_scheme const& s) noexcept
{
    double const u = detail::inv_expm1(s.gamma);
    double const u2 = u * u;
    double const u3 = u2 * u;
    return {s.c0 + s.c1 * u + s.c2 * u2 - 1.0,
            s.gamma * (s.c1 * u + (s.c1 + 2.0 * s.c2) * u2 + 2.0 * s.c2 * u3) - 2.0};
}

/// Coefficients of the approximation for one closure of the matching conditions.
///
/// Case 1 has a single free coefficient and therefore satisfies only the value
/// condition; cases 2 and 3 satisfy both.
inline approx_scheme solve_coefficients(approx_case kind, double gamma = 1.0)
{
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw domain_error("solve_coefficients: gamma must be positive and finite");
    }

    approx_scheme s;
    s.gamma = gamma;
    s.kind = kind;

    double const u = detail::inv_expm1(gamma);
    double const u2 = u * u;
    double const u3 = u2 * u;

    // value:  c0 + u c1 + u^2 c2 = 1
    // slope:  (u + u^2) c1 + (2 u^2 + 2 u^3) c2 = 2 / gamma
    double const slope_c1 = u + u2;
    double const slope_c2 = 2.0 * (u2 + u3);
    double const slope_rhs = 2.0 / gamma;

    switch (kind) {
        case approx_case::legacy:
            s.c0 = 0.0;
            s.c1 = 1.0;
            s.c2 = 1.0;
            break;
        case approx_case::case1:
            s.c1 = 1.0;
            s.c2 = 1.0;
            s.c0 = 1.0 - u - u2;
            break;
        case approx_case::case2: {
            // c1 fixed, slope condition alone determines c2
            s.c1 = 1.0;
            if (slope_c2 == 0.0 || !std::isfinite(slope_c2)) {
                throw degenerate_system_error("solve_coefficients: singular system for case 2");
            }
            s.c2 = (slope_rhs - slope_c1 * s.c1) / slope_c2;
            s.c0 = 1.0 - u * s.c1 - u2 * s.c2;
            break;
        }
        case approx_case::case3: {
            s.c2 = 1.0;
            if (slope_c1 == 0.0 || !std::isfinite(slope_c1)) {
                throw degenerate_system_error("solve_coefficients: singular system for case 3");
            }
            s.c1 = (slope_rhs - slope_c2 * s.c2) / slope_c1;
            s.c0 = 1.0 - u * s.c1 - u2 * s.c2;
            break;
        }
    }
    return s;
}

/// Approximated value of 1/r^2 for screening length b.
inline double approx_inverse_r2(approx_scheme const& s, double b, double r)
{
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw domain_error("approx_inverse_r2: r must be positive and finite");
    }
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw domain_error("approx_inverse_r2: b must be positive and finite");
    }
    double const v = detail::inv_expm1(r / b);
    double const r0 = s.r0(b);
    return (s.c0 + s.c1 * v + s.c2 * v * v) / (r0 * r0);
}

struct approx_error_row
{
    double r;
    double exact;
    double approx;
    double abs_err;
    double rel_err;
};

/// Compares the exact centrifugal barrier prefactor * l(l+1)/r^2 with its
/// approximation on the given grid. prefactor is hbar^2 / (2 mu).
inline std::vector<approx_error_row> approximation_error_report(approx_scheme const& s,
                                                                double b,
                                                                int l,
                                                                std::span<double const> grid,
                                                                double prefactor = 0.5)
{
    if (l < 0) {
        throw domain_error("approximation_error_report: l must be non-negative");
    }
    std::vector<approx_error_row> rows;
    rows.reserve(grid.size());
    double const ll = static_cast<double>(l) * (l + 1);
    double prev = 0.0;
    for (double r : grid) {
        if (!(r > prev)) {
            throw domain_error("approximation_error_report: grid must be positive and strictly increasing");
        }
        prev = r;
        double const exact = prefactor * ll / (r * r);
        double const approx = prefactor * ll * approx_inverse_r2(s, b, r);
        double const abs_err = std::abs(approx - exact);
        double const rel_err = exact != 0.0 ? abs_err / std::abs(exact) : 0.0;
        rows.push_back({r, exact, approx, abs_err, rel_err});
    }
    return rows;
}

} // namespace mrpot
