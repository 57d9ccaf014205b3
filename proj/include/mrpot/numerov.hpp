#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "potential.hpp"
#include "quantum_state.hpp"

namespace mrpot {

/// Domain, resolution and energy bracket of one shooting solve.
///
/// The radial equation is integrated on a grid uniform in x = ln r with
/// `steps` intervals between r_min and r_max.
struct solver_config
{
    double r_min = 1e-6;
    double r_max = 100.0;
    int steps = 20000;
    double e_lo = -1.0;
    double e_hi = 0.0;
    double tolerance = 1e-13; ///< bracket width at which bisection stops, in energy units
    centrifugal_mode mode = centrifugal_mode::exact();
    int max_iterations = 400;
};

struct eigen_result
{
    double energy;
    int nodes;
    double residual;       ///< log-derivative mismatch at the matching point
    int iterations;
    bool sturm_monotone;   ///< node count never decreased with energy during bisection
};

namespace detail {

/// Fixed-grid Numerov integrator for u''(x) = g(x) u(x), with
/// R(r) = sqrt(r) u(ln r) and g = r^2 (2 mu / hbar^2)(V_eff - E) + 1/4.
class numerov_grid
{
public:
    numerov_grid(potential_params const& p, int l, solver_config const& cfg)
      : l_(l)
    {
        validate(p);
        if (!(cfg.r_min > 0.0) || !(cfg.r_max > cfg.r_min)) throw domain_error("numerov: need 0 < r_min < r_max");
        if (cfg.steps < 1000) throw domain_error("numerov: steps must be at least 1000");
        if (!(cfg.tolerance > 0.0)) throw domain_error("numerov: tolerance must be positive");

        std::size_t const count = static_cast<std::size_t>(cfg.steps) + 1;
        double const x0 = std::log(cfg.r_min);
        h_ = (std::log(cfg.r_max) - x0) / cfg.steps;
        two_mu_hbar2_ = 2.0 * p.mass / (p.hbar * p.hbar);
        r2_.resize(count);
        w_.resize(count);
        veff_.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            double const r = std::exp(x0 + h_ * static_cast<double>(i));
            r2_[i] = r * r;
            veff_[i] = effective_potential(p, l, r, cfg.mode);
            w_[i] = r2_[i] * two_mu_hbar2_ * veff_[i] + 0.25;
        }

        // Leading small-r behaviour R ~ r^s with s (s - 1) = lim r^2 (2 mu / hbar^2) V_eff.
        // Next order R ~ r^s (1 + D r / (2 s)) with D the 1/r coefficient.
        double const ll = static_cast<double>(l) * (l + 1);
        double cinf = p.alpha_coupling();
        double dinf = -(p.A + p.alpha_coupling()) / p.b;
        if (cfg.mode.approximated) {
            double const r0 = cfg.mode.scheme.r0(p.b);
            cinf += ll * cfg.mode.scheme.c2 * p.b * p.b / (r0 * r0);
            dinf += ll * (cfg.mode.scheme.c1 - cfg.mode.scheme.c2) * p.b / (r0 * r0);
        }
        else {
            cinf += ll;
        }
        if (cinf + 0.25 < 0.0) throw numeric_error("numerov: potential falls to the centre faster than -1/(4 r^2)");
        u_exponent_ = std::sqrt(cinf + 0.25); // u = R / sqrt(r) ~ r^(s - 1/2)
        start_slope_ = dinf / (2.0 * (u_exponent_ + 0.5));
        x0_ = x0;
    }

    std::size_t size() const noexcept { return w_.size(); }
    double radius(std::size_t i) const noexcept { return std::sqrt(r2_[i]); }
    double veff(std::size_t i) const noexcept { return veff_[i]; }

    /// Number of sign changes of the regular solution over the whole grid.
    int count_nodes(double E) const
    {
        double u_prev = start_value(0);
        double u = start_value(1);
        int nodes = 0;
        for (std::size_t i = 1; i + 1 < size(); ++i) {
            double const next = step(i, u_prev, u, E);
            if ((next > 0.0) != (u > 0.0) && next != 0.0) ++nodes;
            u_prev = u;
            u = next;
            if (std::abs(u) > 1e150) {
                u_prev *= 1e-150;
                u *= 1e-150;
            }
        }
        return nodes;
    }

    /// Whether the three-point recurrence keeps its sign structure at E, i.e. h^2 g / 12 < 1 everywhere.
    bool stable_at(double E) const noexcept
    {
        double const k = h_ * h_ / 12.0;
        for (std::size_t i = 0; i < size(); ++i) {
            if (k * g(i, E) >= 1.0) return false;
        }
        return true;
    }

    /// Outer classical turning point for energy E, clamped inside the grid.
    std::size_t turning_point(double E) const
    {
        std::size_t m = 0;
        for (std::size_t i = size(); i-- > 0;) {
            if (veff_[i] < E) {
                m = i;
                break;
            }
        }
        if (m == 0) {
            m = static_cast<std::size_t>(std::min_element(veff_.begin(), veff_.end()) - veff_.begin());
        }
        return std::clamp<std::size_t>(m, 4, size() - 5);
    }

    struct matched
    {
        double casoratian; ///< u_out[m] u_in[m+1] - u_out[m+1] u_in[m], zero at a discrete eigenvalue
        double defect;     ///< difference of log-derivatives at m
    };

    /// Integrates outward to m + 1 and inward to m; both solutions are scaled to unit size at m.
    matched match(double E, std::size_t m, std::vector<double>* out = nullptr, std::vector<double>* in = nullptr) const
    {
        std::vector<double> uo(m + 2);
        uo[0] = start_value(0);
        uo[1] = start_value(1);
        for (std::size_t i = 1; i <= m; ++i) uo[i + 1] = step(i, uo[i - 1], uo[i], E);

        std::size_t const last = size() - 1;
        std::vector<double> ui(size() - m + 1, 0.0); // ui[k] holds grid index m - 1 + k
        auto at = [&](std::size_t i) -> double& { return ui[i - (m - 1)]; };
        at(last) = 0.0;
        at(last - 1) = 1e-280;
        for (std::size_t i = last - 1; i >= m; --i) {
            at(i - 1) = step_back(i, at(i + 1), at(i), E);
            if (std::abs(at(i - 1)) > 1e150) {
                for (std::size_t k = i - 1; k <= last; ++k) at(k) *= 1e-150;
            }
        }

        double const so = std::abs(uo[m]) > 0.0 ? std::abs(uo[m]) : 1.0;
        double const si = std::abs(at(m)) > 0.0 ? std::abs(at(m)) : 1.0;
        double const o0 = uo[m] / so, o1 = uo[m + 1] / so;
        double const i0 = at(m) / si, i1 = at(m + 1) / si;
        double const cas = o0 * i1 - o1 * i0;
        double const defect = (o0 != 0.0 && i0 != 0.0) ? (o1 / o0 - i1 / i0) / h_ : cas / h_;
        if (out) *out = std::move(uo);
        if (in) {
            in->assign(ui.begin(), ui.end());
        }
        return {cas, defect};
    }

    /// Stitches the outward and inward solutions into R(r) on the grid.
    std::vector<double> assemble(double E, std::size_t m) const
    {
        std::vector<double> uo, ui;
        match(E, m, &uo, &ui);
        double const scale = ui[1] != 0.0 ? uo[m] / ui[1] : 0.0;
        std::vector<double> R(size());
        for (std::size_t i = 0; i <= m; ++i) R[i] = uo[i] * std::pow(r2_[i], 0.25);
        for (std::size_t i = m + 1; i < size(); ++i) R[i] = scale * ui[i - (m - 1)] * std::pow(r2_[i], 0.25);
        return R;
    }

private:
    double g(std::size_t i, double E) const noexcept { return w_[i] - r2_[i] * two_mu_hbar2_ * E; }

    double start_value(std::size_t i) const noexcept
    {
        double const r = std::sqrt(r2_[i]);
        double const r_first = std::sqrt(r2_[0]);
        return std::exp(u_exponent_ * h_ * static_cast<double>(i)) * (1.0 + start_slope_ * r) /
               (1.0 + start_slope_ * r_first); // relative to x0
    }

    /// u[i+1] from u[i-1], u[i].
    double step(std::size_t i, double u_prev, double u, double E) const noexcept
    {
        double const k = h_ * h_ / 12.0;
        double const a_prev = 1.0 - k * g(i - 1, E);
        double const a = 1.0 + 5.0 * k * g(i, E);
        double const a_next = 1.0 - k * g(i + 1, E);
        return (2.0 * a * u - a_prev * u_prev) / a_next;
    }

    /// u[i-1] from u[i+1], u[i].
    double step_back(std::size_t i, double u_next, double u, double E) const noexcept
    {
        double const k = h_ * h_ / 12.0;
        double const a_next = 1.0 - k * g(i + 1, E);
        double const a = 1.0 + 5.0 * k * g(i, E);
        double const a_prev = 1.0 - k * g(i - 1, E);
        return (2.0 * a * u - a_next * u_next) / a_prev;
    }

    int l_;
    double h_ = 0.0;
    double x0_ = 0.0;
    double two_mu_hbar2_ = 2.0;
    double u_exponent_ = 0.5;
    double start_slope_ = 0.0;
    std::vector<double> r2_;
    std::vector<double> w_;
    std::vector<double> veff_;
};

} // namespace detail

/// Bound-state energy of the radial equation by Numerov shooting.
///
/// Node counting of the regular solution narrows the bracket to the single
/// level with st.n nodes; bisection on the outward/inward mismatch at the
/// outer turning point then converges the energy.
inline eigen_result solve_eigenvalue(potential_params const& p, quantum_state const& st, solver_config const& cfg)
{
    if (st.n < 0 || st.l < 0) throw domain_error("solve_eigenvalue: n and l must be non-negative");
    if (!(cfg.e_lo < cfg.e_hi)) throw domain_error("solve_eigenvalue: empty energy bracket");
    detail::numerov_grid const grid(p, st.l, cfg);

    if (!grid.stable_at(cfg.e_lo)) {
        throw numeric_error("solve_eigenvalue: grid too coarse for energy " + std::to_string(cfg.e_lo) +
                            "; increase steps");
    }

    double lo = cfg.e_lo;
    double hi = cfg.e_hi;
    int n_lo = grid.count_nodes(lo);
    int n_hi = grid.count_nodes(hi);
    if (!(n_lo <= st.n && n_hi > st.n)) {
        throw bracket_error("solve_eigenvalue: bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] has node counts " + std::to_string(n_lo) + ".." + std::to_string(n_hi) +
                            ", which do not straddle n = " + std::to_string(st.n));
    }

    bool monotone = true;
    int it = 0;
    // isolate the level: node count n at lo, n + 1 at hi
    while ((n_lo != st.n || n_hi != st.n + 1) && it < cfg.max_iterations) {
        double const mid = 0.5 * (lo + hi);
        int const nm = grid.count_nodes(mid);
        if (nm < n_lo || nm > n_hi) monotone = false;
        if (nm > st.n) {
            hi = mid;
            n_hi = nm;
        }
        else {
            lo = mid;
            n_lo = nm;
        }
        ++it;
    }

    std::size_t const m = grid.turning_point(0.5 * (lo + hi));
    double c_lo = grid.match(lo, m).casoratian;
    while (hi - lo > cfg.tolerance && it < cfg.max_iterations) {
        double const mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double const c_mid = grid.match(mid, m).casoratian;
        if ((c_mid > 0.0) == (c_lo > 0.0)) {
            lo = mid;
            c_lo = c_mid;
        }
        else {
            hi = mid;
        }
        ++it;
    }
    if (hi - lo > cfg.tolerance) {
        throw numeric_error("solve_eigenvalue: no convergence after " + std::to_string(it) + " iterations");
    }

    double const E = 0.5 * (lo + hi);
    auto const mm = grid.match(E, m);
    auto const R = grid.assemble(E, m);
    int nodes = 0;
    double peak = 0.0;
    for (double v : R) peak = std::max(peak, std::abs(v));
    double last = 0.0;
    for (double v : R) {
        if (std::abs(v) <= 1e-10 * peak) continue;
        if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++nodes;
        last = v;
    }
    return {E, nodes, std::abs(mm.defect), it, monotone};
}

/// Chooses domain, resolution and bracket for one state from an estimate of its energy.
///
/// r_max sits 35 decay lengths beyond the outer turning point. The bracket
/// starts at 1.5x and 0.5x the binding energy relative to the continuum
/// threshold and is widened until node counts straddle n. A non-binding hint
/// falls back to [min V_eff, threshold).
inline solver_config auto_config(potential_params const& p, quantum_state const& st, double analytic_hint,
                                 centrifugal_mode const& mode = centrifugal_mode::exact())
{
    validate(p);
    solver_config cfg;
    cfg.mode = mode;
    cfg.r_min = 1e-6 * p.b;

    double const ll = static_cast<double>(st.l) * (st.l + 1);
    double threshold = 0.0;
    if (mode.approximated) {
        double const r0 = mode.scheme.r0(p.b);
        threshold = p.hbar * p.hbar / (2.0 * p.mass) * ll * mode.scheme.c0 / (r0 * r0);
    }

    // coarse scan of V_eff for the turning point and the well depth
    auto veff = [&](double r) { return effective_potential(p, st.l, r, mode); };
    double v_min = veff(cfg.r_min);
    double r_far = 1000.0 * p.b;
    constexpr int scan = 4000;
    double const scan_step = std::log(r_far / cfg.r_min) / scan;

    bool const binding = std::isfinite(analytic_hint) && analytic_hint < threshold;
    double binding_energy = binding ? threshold - analytic_hint : 0.0;
    double r_turn = p.b;
    for (int i = 0; i <= scan; ++i) {
        double const r = cfg.r_min * std::exp(scan_step * i);
        double const v = veff(r);
        v_min = std::min(v_min, v);
        if (binding && v < analytic_hint) r_turn = r;
    }

    if (binding) {
        double const kappa = std::sqrt(2.0 * p.mass * binding_energy) / p.hbar;
        cfg.r_max = std::max(r_turn + 35.0 / kappa, 10.0 * p.b);
        cfg.e_lo = threshold - 1.5 * binding_energy;
        cfg.e_hi = threshold - 0.5 * binding_energy;
    }
    else {
        cfg.r_max = 200.0 * p.b;
        cfg.e_lo = v_min;
        cfg.e_hi = threshold - 1e-12 * std::max(1.0, std::abs(v_min));
    }

    double const span = std::log(cfg.r_max / cfg.r_min);
    cfg.steps = std::max(20000, static_cast<int>(std::ceil(span / 2.5e-4)));
    double const scale = std::max(std::abs(cfg.e_lo), p.energy_unit());
    cfg.tolerance = 1e-14 * scale;

    detail::numerov_grid const grid(p, st.l, cfg);
    for (int k = 0; k < 60 && grid.count_nodes(cfg.e_lo) > st.n; ++k) {
        cfg.e_lo = threshold - 2.0 * (threshold - cfg.e_lo);
    }
    for (int k = 0; k < 60 && grid.count_nodes(cfg.e_hi) <= st.n; ++k) {
        double const next = threshold - 0.5 * (threshold - cfg.e_hi);
        if (next >= threshold) break;
        cfg.e_hi = next;
    }
    return cfg;
}

} // namespace mrpot
