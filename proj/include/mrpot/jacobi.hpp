#pragma once

#include <cmath>

#include "errors.hpp"

namespace mrpot {

/// Jacobi polynomial P_n^(a,b)(x) by the three-term recurrence in degree.
///
/// Orthogonality needs a, b > -1, but the recurrence is evaluated for any real
/// parameters as long as no recurrence denominator vanishes.
inline double jacobi(int n, double a, double b, double x)
{
    if (n < 0) throw domain_error("jacobi: degree must be non-negative");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x)) {
        throw domain_error("jacobi: non-finite argument");
    }
    if (n == 0) return 1.0;

    double p_prev = 1.0;
    double p = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    double const ab = a + b;
    double const a2_b2 = a * a - b * b;
    for (int k = 2; k <= n; ++k) {
        double const s = 2.0 * k + ab;
        double const den = 2.0 * k * (k + ab) * (s - 2.0);
        if (den == 0.0) throw domain_error("jacobi: recurrence denominator vanishes for these parameters");
        double const c1 = (s - 1.0) * (s * (s - 2.0) * x + a2_b2);
        double const c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        double const next = (c1 * p - c2 * p_prev) / den;
        p_prev = p;
        p = next;
    }
    return p;
}

} // namespace mrpot
