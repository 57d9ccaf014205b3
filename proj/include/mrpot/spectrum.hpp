#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "centrifugal.hpp"
#include "errors.hpp"
#include "potential.hpp"
#include "quantum_state.hpp"

namespace mrpot {

struct auxiliary
{
    double a;      ///< sqrt((1 - 2 alpha)^2 + 4 l (l+1) c2 / gamma^2)
    double Lambda; ///< (a - 1) / 2

    /// a == 0 happens only for alpha = 1/2, l = 0; the wavefunction exponent 2 Lambda + 1 vanishes.
    bool degenerate() const noexcept { return a == 0.0; }
};

namespace detail {

inline void check_state(quantum_state const& st)
{
    if (st.n < 0 || st.l < 0) throw domain_error("quantum state: n and l must be non-negative");
}

inline double ll1(int l) noexcept { return static_cast<double>(l) * (l + 1); }

/// Approximation coefficients in units of 1/b^2: c_i / gamma^2.
struct reduced_coefficients
{
    double c0;
    double c1;
    double c2;
};

inline reduced_coefficients reduced(approx_scheme const& s) noexcept
{
    double const g2 = s.gamma * s.gamma;
    return {s.c0 / g2, s.c1 / g2, s.c2 / g2};
}

inline auxiliary auxiliary_from(double alpha, int l, double c2)
{
    if (l < 0) throw domain_error("auxiliary_quantities: l must be non-negative");
    double const t = 1.0 - 2.0 * alpha;
    double const a = std::sqrt(t * t + 4.0 * ll1(l) * c2);
    return {a, 0.5 * (a - 1.0)};
}

inline double epsilon_from(potential_params const& p, quantum_state const& st, double c1, double c2)
{
    check_state(st);
    auto const aux = auxiliary_from(p.alpha, st.l, c2);
    double const np1 = st.n + 1.0;
    double const den = 2.0 * (np1 + aux.Lambda);
    if (!(den > 0.0)) throw numeric_error("epsilon_prime: non-positive denominator n + 1 + Lambda");
    return (p.A - np1 * np1 - ll1(st.l) * c1 - (2.0 * st.n + 1.0) * aux.Lambda) / den;
}

} // namespace detail

/// a and Lambda for the approximation with c1 = c2 = 1 at r0 = b.
inline auxiliary auxiliary_quantities(double alpha, int l) { return detail::auxiliary_from(alpha, l, 1.0); }

/// a and Lambda for a general scheme. The c2 term adds l (l+1) c2 / gamma^2
/// to the coupling alpha (alpha - 1).
inline auxiliary auxiliary_quantities(double alpha, int l, approx_scheme const& scheme)
{
    return detail::auxiliary_from(alpha, l, detail::reduced(scheme).c2);
}

/// Dimensionless bound-state wave number; positive exactly when (n, l) is bound.
///
/// Stored with the sign that makes z^eps' decay for r -> infinity, i.e. the
/// negative of the N-U polynomial-condition root. This overload assumes
/// c1 = c2 = 1 at r0 = b, as in case 1 and the legacy scheme.
inline double epsilon_prime(potential_params const& p, quantum_state const& st)
{
    return detail::epsilon_from(p, st, 1.0, 1.0);
}

/// General scheme: the c1 term lowers A by l (l+1) c1 / gamma^2.
inline double epsilon_prime(potential_params const& p, quantum_state const& st, approx_scheme const& scheme)
{
    auto const c = detail::reduced(scheme);
    return detail::epsilon_from(p, st, c.c1, c.c2);
}

struct energy_solution
{
    double energy;
    double a;
    double Lambda;
    double epsilon_prime;
    double scheme_c0;
};

namespace detail {

inline double critical_root(quantum_state const& st, double alpha, approx_scheme const& scheme, double sign)
{
    check_state(st);
    auto const c = reduced(scheme);
    if (c.c0 < 0.0) throw domain_error("critical_coupling: requires c0 >= 0");
    double const L = auxiliary_from(alpha, st.l, c.c2).Lambda;
    double const ll = ll1(st.l);
    double const np1 = st.n + 1.0;
    // E = 0 where eps' = +-sqrt(l (l+1) c0)
    return np1 * np1 + (2.0 * st.n + 1.0) * L + ll * c.c1 + sign * 2.0 * (np1 + L) * std::sqrt(ll * c.c0);
}

} // namespace detail

/// Coupling at which the binding energy of (n, l) vanishes.
///
/// E(A) is quadratic in A; this is the root on the bound branch (eps' > 0), so
/// levels with A slightly above it have E < 0. For c1 = c2 = 1 it equals
/// (n+1+Lambda+sqrt(l(l+1)c0))^2 - Lambda(Lambda+1) + l(l+1)(1-c0).
inline double critical_coupling(quantum_state const& st, double alpha, approx_scheme const& scheme)
{
    return detail::critical_root(st, alpha, scheme, 1.0);
}

/// The same expression with the opposite sign on the square root. This is the
/// second zero of E(A), lying on the eps' < 0 branch; kept for comparison.
inline double critical_coupling_unbound_root(quantum_state const& st, double alpha, approx_scheme const& scheme)
{
    return detail::critical_root(st, alpha, scheme, -1.0);
}

inline energy_solution energy_level(potential_params const& p, quantum_state const& st, approx_scheme const& scheme)
{
    validate(p);
    double const eps = epsilon_prime(p, st, scheme);
    if (!(eps > 0.0)) {
        throw unbound_state_error("energy_level: state " + spectroscopic_label(st) + " is not bound",
                                  critical_coupling(st, p.alpha, scheme));
    }
    auto const aux = auxiliary_quantities(p.alpha, st.l, scheme);
    double const unit = p.energy_unit();
    double const E = -unit * eps * eps + unit * detail::ll1(st.l) * detail::reduced(scheme).c0;
    return {E, aux.a, aux.Lambda, eps, scheme.c0};
}

/// Upper bound hbar^2 l (l+1) c0 / (2 mu b^2) of every bound level.
inline double energy_ceiling(potential_params const& p, int l, approx_scheme const& scheme)
{
    return p.energy_unit() * detail::ll1(l) * detail::reduced(scheme).c0;
}

/// All bound (n, l) with l <= l_max, sorted by energy.
inline std::vector<std::pair<quantum_state, energy_solution>>
enumerate_bound_states(potential_params const& p, approx_scheme const& scheme, int l_max)
{
    if (l_max < 0) throw domain_error("enumerate_bound_states: l_max must be non-negative");
    validate(p);
    std::vector<std::pair<quantum_state, energy_solution>> out;
    for (int l = 0; l <= l_max; ++l) {
        // eps' decreases monotonically in n
        for (int n = 0;; ++n) {
            quantum_state const st{n, l};
            if (!(epsilon_prime(p, st, scheme) > 0.0)) break;
            out.emplace_back(st, energy_level(p, st, scheme));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        if (x.second.energy != y.second.energy) return x.second.energy < y.second.energy;
        return x.first < y.first;
    });
    return out;
}

/// Hulthen limit (alpha = 0 or 1, Lambda = l) for schemes with c1 = c2 = 1 at r0 = b.
inline double hulthen_energy(potential_params const& p, quantum_state const& st, approx_scheme const& scheme)
{
    validate(p);
    detail::check_state(st);
    double const N = st.principal();
    if (!(p.A > N * N)) {
        throw unbound_state_error("hulthen_energy: state " + spectroscopic_label(st) + " is not bound", N * N);
    }
    double const hbar2 = p.hbar * p.hbar;
    double const b2 = p.b * p.b;
    double const d = p.A - N * N;
    return -hbar2 * d * d / (8.0 * p.mass * b2 * N * N) + hbar2 * detail::ll1(st.l) * scheme.c0 / (2.0 * p.mass * b2);
}

/// Screened-Coulomb form of the Hulthen levels with hbar = mu = e = 1,
/// strength Z and screening delta = 1/b. Same scheme restriction as hulthen_energy.
inline double hulthen_energy_screened(double Z, double delta, quantum_state const& st, approx_scheme const& scheme)
{
    detail::check_state(st);
    if (!(Z > 0.0) || !(delta > 0.0)) throw domain_error("hulthen_energy_screened: Z and delta must be positive");
    double const N = st.principal();
    double const w = 1.0 / N - N * delta / (2.0 * Z);
    if (!(w > 0.0)) {
        throw unbound_state_error("hulthen_energy_screened: state " + spectroscopic_label(st) + " is not bound",
                                  N * N);
    }
    return -0.5 * Z * Z * w * w + detail::ll1(st.l) * scheme.c0 * delta * delta / 2.0;
}

/// Hydrogen-like level in atomic units.
inline double coulomb_energy(double Z, quantum_state const& st)
{
    detail::check_state(st);
    if (!(Z > 0.0)) throw domain_error("coulomb_energy: Z must be positive");
    double const N = st.principal();
    return -Z * Z / (2.0 * N * N);
}

} // namespace mrpot
