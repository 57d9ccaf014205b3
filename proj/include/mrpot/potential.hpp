#pragma once

#include <cmath>

#include "centrifugal.hpp"
#include "errors.hpp"

namespace mrpot {

/// One Manning-Rosen problem instance. Defaults to atomic-unit mode (hbar = mu = 1).
struct potential_params
{
    double A = 0.0;
    double alpha = 0.0;
    double b = 1.0;
    double mass = 1.0;
    double hbar = 1.0;

    /// hbar^2 / (2 mu b^2), the energy unit of the dimensionless spectrum.
    double energy_unit() const noexcept { return hbar * hbar / (2.0 * mass * b * b); }

    /// alpha (alpha - 1), invariant under alpha -> 1 - alpha.
    double alpha_coupling() const noexcept { return alpha * (alpha - 1.0); }
};

inline void validate(potential_params const& p)
{
    if (!(p.b > 0.0) || !std::isfinite(p.b)) throw domain_error("potential: b must be positive");
    if (!(p.mass > 0.0) || !std::isfinite(p.mass)) throw domain_error("potential: mass must be positive");
    if (!(p.hbar > 0.0) || !std::isfinite(p.hbar)) throw domain_error("potential: hbar must be positive");
    if (!std::isfinite(p.A) || !std::isfinite(p.alpha)) throw domain_error("potential: A and alpha must be finite");
}

namespace detail {

inline void check_radius(double r, char const* who)
{
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw domain_error(std::string(who) + ": r must be positive and finite");
    }
}

} // namespace detail

/// V(r) = (hbar^2 / 2 mu b^2) [-A v + alpha (alpha - 1) v^2],  v = 1 / (e^{r/b} - 1).
inline double mr_potential(potential_params const& p, double r)
{
    validate(p);
    detail::check_radius(r, "mr_potential");
    double const v = detail::inv_expm1(r / p.b);
    return p.energy_unit() * (-p.A * v + p.alpha_coupling() * v * v);
}

/// Same potential written as -(C e^{-r/b} + D e^{-2r/b}) / (1 - e^{-r/b})^2 with
/// C = A and D = -A - alpha (alpha - 1).
inline double mr_potential_cd(potential_params const& p, double r)
{
    validate(p);
    detail::check_radius(r, "mr_potential_cd");
    double const C = p.A;
    double const D = -p.A - p.alpha_coupling();
    double const x = std::exp(-r / p.b);
    double const one_minus_x = -std::expm1(-r / p.b);
    return -p.energy_unit() * (C * x + D * x * x) / (one_minus_x * one_minus_x);
}

struct potential_min
{
    double r0;
    double V0;
};

/// Location and depth of the interior minimum. Only alpha (alpha - 1) enters,
/// so alpha and 1 - alpha give the same result.
inline potential_min potential_minimum(potential_params const& p)
{
    validate(p);
    double const k = p.alpha_coupling();
    double const ratio = 2.0 * k / p.A;
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw no_minimum_error("potential_minimum: 1 + 2 alpha (alpha - 1) / A must exceed 1");
    }
    double const r0 = p.b * std::log1p(ratio);
    return {r0, mr_potential(p, r0)};
}

/// Curvature d^2V/dr^2 at the minimum,
/// (hbar^2 / 2 mu) A^2 [A + 2 alpha (alpha - 1)]^2 / (8 b^4 alpha^3 (alpha - 1)^3).
inline double second_derivative_at_min(potential_params const& p)
{
    potential_minimum(p); // same preconditions
    double const k = p.alpha_coupling();
    double const s = p.A + 2.0 * k;
    double const b2 = p.b * p.b;
    double const hbar2_2mu = p.hbar * p.hbar / (2.0 * p.mass);
    return hbar2_2mu * p.A * p.A * s * s / (8.0 * b2 * b2 * k * k * k);
}

/// Treatment of the centrifugal barrier in the radial equation.
struct centrifugal_mode
{
    bool approximated = false;
    approx_scheme scheme{};

    static centrifugal_mode exact() { return {}; }
    static centrifugal_mode approx(approx_scheme const& s) { return {true, s}; }
};

/// hbar^2 l (l+1) / (2 mu) times 1/r^2 or its approximation.
inline double centrifugal_term(potential_params const& p, int l, double r, centrifugal_mode const& mode)
{
    if (l == 0) return 0.0;
    double const ll = static_cast<double>(l) * (l + 1);
    double const hbar2_2mu = p.hbar * p.hbar / (2.0 * p.mass);
    double const inv_r2 = mode.approximated ? approx_inverse_r2(mode.scheme, p.b, r) : 1.0 / (r * r);
    return hbar2_2mu * ll * inv_r2;
}

inline double effective_potential(potential_params const& p, int l, double r, centrifugal_mode const& mode)
{
    if (l < 0) throw domain_error("effective_potential: l must be non-negative");
    return mr_potential(p, r) + centrifugal_term(p, l, r, mode);
}

} // namespace mrpot
