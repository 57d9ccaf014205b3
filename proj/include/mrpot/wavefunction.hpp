#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "centrifugal.hpp"
#include "errors.hpp"
#include "jacobi.hpp"
#include "potential.hpp"
#include "quantum_state.hpp"
#include "spectrum.hpp"

namespace mrpot {

struct radial_sample
{
    double r;
    double R;
};

/// Sampled, normalized bound-state radial function
///   R(r) = N z^eps' (1 - z)^(1 + Lambda) P_n^(2 eps', 2 Lambda + 1)(1 - 2z),  z = e^{-r/b}.
struct radial_function
{
    quantum_state state;
    potential_params params;
    double scheme_c0 = 0.0;
    double epsilon_prime = 0.0;
    double Lambda = 0.0;
    double norm_constant = 0.0;
    std::vector<radial_sample> samples;
};

namespace detail {

/// Unnormalized z^eps (1 - z)^(1 + Lambda) P_n(1 - 2z) at radius r.
inline double radial_shape(int n, double eps, double Lambda, double b, double r)
{
    double const x = r / b;
    double const z = std::exp(-x);
    double const one_minus_z = -std::expm1(-x);
    double const P = jacobi(n, 2.0 * eps, 2.0 * Lambda + 1.0, 1.0 - 2.0 * z);
    // z^eps evaluated as e^{-eps x} so that large eps x underflows cleanly
    return std::exp(-eps * x) * std::pow(one_minus_z, 1.0 + Lambda) * P;
}

inline void check_grid(std::span<double const> grid, char const* who)
{
    if (grid.empty()) throw domain_error(std::string(who) + ": empty grid");
    double prev = 0.0;
    for (double r : grid) {
        if (!(r > prev) || !std::isfinite(r)) {
            throw domain_error(std::string(who) + ": grid must be positive and strictly increasing");
        }
        prev = r;
    }
}

/// Running sum of sign * exp(log_mag) terms without overflow.
class log_signed_sum
{
public:
    void add(double sign, double log_mag)
    {
        if (sign == 0.0) return;
        terms_.push_back({sign, log_mag});
        max_log_ = std::max(max_log_, log_mag);
    }

    /// Returns the sum as (sign, log|sum|); sign 0 for an exact zero.
    std::pair<double, double> value() const
    {
        if (terms_.empty()) return {0.0, -std::numeric_limits<double>::infinity()};
        double acc = 0.0;
        for (auto const& t : terms_) acc += t.sign * std::exp(t.log_mag - max_log_);
        if (acc == 0.0) return {0.0, -std::numeric_limits<double>::infinity()};
        return {acc > 0.0 ? 1.0 : -1.0, max_log_ + std::log(std::abs(acc))};
    }

    /// Largest |term| / |sum|, a measure of cancellation.
    double cancellation() const
    {
        auto const [s, lg] = value();
        if (s == 0.0) return std::numeric_limits<double>::infinity();
        return std::exp(max_log_ - lg);
    }

private:
    struct term
    {
        double sign;
        double log_mag;
    };
    std::vector<term> terms_;
    double max_log_ = -std::numeric_limits<double>::infinity();
};

inline double lgam(double x) { return boost::math::lgamma(x); }

struct bound_data
{
    double eps;
    double Lambda;
};

inline bound_data require_bound(potential_params const& p, quantum_state const& st, approx_scheme const& scheme)
{
    auto const sol = energy_level(p, st, scheme);
    return {sol.epsilon_prime, sol.Lambda};
}

} // namespace detail

/// Result of the z-space normalization integral.
struct norm_integral
{
    double value;  ///< b * int_0^1 z^(2 eps' - 1) (1 - z)^(2 Lambda + 2) P_n^2 dz
    double error;  ///< quadrature error estimate
    std::size_t levels;
};

/// Evaluates the normalization integral by tanh-sinh quadrature, which
/// copes with the z^(2 eps' - 1) endpoint singularity for small eps'.
inline norm_integral normalization_integral(int n, double eps, double Lambda, double b, double tolerance = 1e-10)
{
    if (!(eps > 0.0)) throw domain_error("normalization_integral: eps' must be positive");
    if (!(2.0 * Lambda + 1.0 > -1.0)) throw domain_error("normalization_integral: 2 Lambda + 1 must exceed -1");

    double const ja = 2.0 * eps;
    double const jb = 2.0 * Lambda + 1.0;
    auto integrand = [&](double z) {
        double const zc = 1.0 - z;
        if (z <= 0.0 || zc <= 0.0) return 0.0;
        double const P = jacobi(n, ja, jb, 1.0 - 2.0 * z);
        return std::exp((2.0 * eps - 1.0) * std::log(z) + (2.0 * Lambda + 2.0) * std::log(zc)) * P * P;
    };

    boost::math::quadrature::tanh_sinh<double> integrator(15);
    double err = 0.0;
    double l1 = 0.0;
    std::size_t levels = 0;
    double value = 0.0;
    try {
        value = integrator.integrate(integrand, 0.0, 1.0, tolerance, &err, &l1, &levels);
    } catch (std::exception const& e) {
        throw numeric_error(std::string("normalization_integral: quadrature failed: ") + e.what());
    }
    if (!std::isfinite(value) || !(value > 0.0) || err > 100.0 * tolerance * value) {
        throw numeric_error("normalization_integral: no convergence (value " + std::to_string(value) + ", error " +
                            std::to_string(err) + ", levels " + std::to_string(levels) + ")");
    }
    return {b * value, b * err, levels};
}

/// N_nl from direct quadrature of the normalization integral.
inline double normalization_quadrature(potential_params const& p, quantum_state const& st, approx_scheme const& scheme)
{
    auto const d = detail::require_bound(p, st, scheme);
    return 1.0 / std::sqrt(normalization_integral(st.n, d.eps, d.Lambda, p.b).value);
}

/// Squared norm b * int z^(2 eps' - 1) (1 - z)^(2 Lambda + 2) P_n^2 dz as a
/// finite double sum of Beta functions, obtained by expanding P_n(1 - 2z) in
/// powers of z. Evaluated in log-gamma space with sign tracking.
inline double normalization_sum(int n, double eps, double Lambda, double b)
{
    using detail::lgam;
    if (!(eps > 0.0)) throw domain_error("normalization_sum: eps' must be positive");
    double const ja = 2.0 * eps;
    double const jb = 2.0 * Lambda + 1.0;

    // P_n^(a,b)(1 - 2z) = sum_m (-1)^m c_m z^m,
    // log c_m = lgamma(a+n+1) - lgamma(n+1) - lgamma(a+b+n+1)
    //           + log C(n,m) + lgamma(a+b+n+m+1) - lgamma(a+m+1)
    std::vector<double> log_c(static_cast<std::size_t>(n) + 1);
    double const head = lgam(ja + n + 1.0) - lgam(n + 1.0) - lgam(ja + jb + n + 1.0);
    for (int m = 0; m <= n; ++m) {
        double const log_binom = lgam(n + 1.0) - lgam(m + 1.0) - lgam(n - m + 1.0);
        log_c[static_cast<std::size_t>(m)] = head + log_binom + lgam(ja + jb + n + m + 1.0) - lgam(ja + m + 1.0);
    }

    // int z^(2eps - 1 + m + k) (1 - z)^(2 Lambda + 2) dz = B(2 eps + m + k, 2 Lambda + 3)
    double const beta_b = 2.0 * Lambda + 3.0;
    detail::log_signed_sum sum;
    for (int m = 0; m <= n; ++m) {
        for (int k = 0; k <= n; ++k) {
            double const beta_a = ja + m + k;
            double const log_beta = lgam(beta_a) + lgam(beta_b) - lgam(beta_a + beta_b);
            double const sign = ((m + k) % 2 == 0) ? 1.0 : -1.0;
            sum.add(sign, log_c[static_cast<std::size_t>(m)] + log_c[static_cast<std::size_t>(k)] + log_beta);
        }
    }
    auto const [sign, log_mag] = sum.value();
    if (!(sign > 0.0) || !std::isfinite(log_mag)) {
        throw numeric_error("normalization_sum: non-positive squared norm (cancellation " +
                            std::to_string(sum.cancellation()) + ")");
    }
    double const s = b * std::exp(log_mag);
    if (!std::isfinite(s) || s == 0.0) throw numeric_error("normalization_sum: overflow");
    return s;
}

/// N_nl from the closed-form double sum.
inline double normalization_closed_form(potential_params const& p, quantum_state const& st, approx_scheme const& scheme)
{
    auto const d = detail::require_bound(p, st, scheme);
    return 1.0 / std::sqrt(normalization_sum(st.n, d.eps, d.Lambda, p.b));
}

/// The literature double sum s(n) for the squared norm, evaluated exactly as
/// printed, including its (-1)^n prefactor and the (p + 2 Lambda + 2) factor:
///
///   s(n) = b (-1)^n G(n+2L+2) G(n+2e+1)^2 / G(n+2e+2L+2)
///          * sum_{p,r} (-1)^{p+r} G(n+2e+r-p+1) (p+2L+2)
///            / [p! r! (n-p)! (n-r)! G(n+2e-p+1) G(2e+r+1) (n+2e+r+2L+2)]
///
/// It does not equal the normalization integral: already for n = 0 it gives
/// 2 eps' b B(2 eps', 2 Lambda + 3) instead of b B(2 eps', 2 Lambda + 3). It is
/// reported for comparison only. May be negative.
inline double literature_normalization_sum(int n, double eps, double Lambda, double b)
{
    using detail::lgam;
    double const e2 = 2.0 * eps;
    double const L2 = 2.0 * Lambda;
    detail::log_signed_sum sum;
    for (int p = 0; p <= n; ++p) {
        for (int r = 0; r <= n; ++r) {
            double const lin1 = p + L2 + 2.0;
            double const lin2 = n + e2 + r + L2 + 2.0;
            double const sign = (((p + r) % 2 == 0) ? 1.0 : -1.0) * (lin1 < 0 ? -1.0 : 1.0) * (lin2 < 0 ? -1.0 : 1.0);
            double const lg = lgam(n + e2 + r - p + 1.0) + std::log(std::abs(lin1)) - lgam(p + 1.0) - lgam(r + 1.0) -
                              lgam(n - p + 1.0) - lgam(n - r + 1.0) - lgam(n + e2 - p + 1.0) - lgam(e2 + r + 1.0) -
                              std::log(std::abs(lin2));
            sum.add(sign, lg);
        }
    }
    auto const [sign, log_mag] = sum.value();
    if (sign == 0.0) return 0.0;
    double const prefactor_log = lgam(n + L2 + 2.0) + 2.0 * lgam(n + e2 + 1.0) - lgam(n + e2 + L2 + 2.0);
    double const parity = (n % 2 == 0) ? 1.0 : -1.0;
    return b * parity * sign * std::exp(prefactor_log + log_mag);
}

/// Number of sign changes of R, ignoring samples that are negligible
/// relative to the largest magnitude.
inline int count_nodes(std::span<radial_sample const> samples, double rel_floor = 1e-10)
{
    double peak = 0.0;
    for (auto const& s : samples) peak = std::max(peak, std::abs(s.R));
    double const floor = rel_floor * peak;
    int nodes = 0;
    double last = 0.0;
    for (auto const& s : samples) {
        if (std::abs(s.R) <= floor) continue;
        if (last != 0.0 && (s.R > 0.0) != (last > 0.0)) ++nodes;
        last = s.R;
    }
    return nodes;
}

/// Log-spaced grid from 1e-4 b to max(60 b, 40 b / eps').
inline std::vector<double> default_grid(double b, double eps, std::size_t count = 4000)
{
    if (count == 0) return {};
    double const r_lo = 1e-4 * b;
    double const r_hi = std::max(60.0 * b, 40.0 * b / eps);
    std::vector<double> grid(count);
    if (count == 1) {
        grid[0] = r_lo;
        return grid;
    }
    double const step = std::log(r_hi / r_lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) grid[i] = r_lo * std::exp(step * static_cast<double>(i));
    grid.back() = r_hi;
    return grid;
}

namespace detail {

inline radial_function sample_radial(quantum_state const& st, potential_params const& p, double c0, double eps,
                                     double Lambda, std::span<double const> grid)
{
    radial_function f;
    f.state = st;
    f.params = p;
    f.scheme_c0 = c0;
    f.epsilon_prime = eps;
    f.Lambda = Lambda;
    f.norm_constant = 1.0 / std::sqrt(normalization_integral(st.n, eps, Lambda, p.b).value);
    f.samples.reserve(grid.size());
    for (double r : grid) f.samples.push_back({r, f.norm_constant * radial_shape(st.n, eps, Lambda, p.b, r)});
    return f;
}

} // namespace detail

inline radial_function radial_wavefunction(potential_params const& p, quantum_state const& st,
                                           approx_scheme const& scheme, std::span<double const> grid)
{
    auto const d = detail::require_bound(p, st, scheme);
    detail::check_grid(grid, "radial_wavefunction");
    return detail::sample_radial(st, p, scheme.c0, d.eps, d.Lambda, grid);
}

/// Hulthen-limit radial function with hbar = mu = e = 1, strength Z and
/// screening delta:
///   R = N e^{-delta eps' r} (1 - e^{-delta r})^(l+1) P_n^(2 eps', 2l+1)(1 - 2 e^{-delta r}),
///   eps' = Z / (delta N) - N / 2.
inline radial_function hulthen_wavefunction(double Z, double delta, quantum_state const& st,
                                            std::span<double const> grid)
{
    detail::check_state(st);
    if (!(Z > 0.0) || !(delta > 0.0)) throw domain_error("hulthen_wavefunction: Z and delta must be positive");
    double const N = st.principal();
    double const eps = Z / (delta * N) - N / 2.0;
    if (!(eps > 0.0)) {
        throw unbound_state_error("hulthen_wavefunction: state " + spectroscopic_label(st) + " is not bound",
                                  N * N);
    }
    detail::check_grid(grid, "hulthen_wavefunction");
    potential_params p;
    p.b = 1.0 / delta;
    p.A = 2.0 * Z / delta;
    p.alpha = 1.0;
    return detail::sample_radial(st, p, 0.0, eps, static_cast<double>(st.l), grid);
}

} // namespace mrpot
