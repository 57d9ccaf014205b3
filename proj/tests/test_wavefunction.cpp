#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include <mrpot/published.hpp>
#include <mrpot/wavefunction.hpp>

using namespace mrpot;

namespace {

potential_params table_params(double inv_b, double alpha)
{
    potential_params p;
    p.b = 1.0 / inv_b;
    p.A = 2.0 * p.b;
    p.alpha = alpha;
    return p;
}

approx_scheme const case1 = solve_coefficients(approx_case::case1);

double binom(double top, int k)
{
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (top - i) / (i + 1);
    return r;
}

// Explicit sum: P_n^(a,b)(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)
double jacobi_sum(int n, double a, double b, double x)
{
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        s += binom(n + a, n - k) * binom(n + b, k) * std::pow((x - 1) / 2, k) * std::pow((x + 1) / 2, n - k);
    }
    return s;
}

// Composite Simpson of R^2 on a log grid, r in (lo, hi).
double r_space_norm(radial_function const& f)
{
    double const lo = std::log(f.samples.front().r);
    double const hi = std::log(f.samples.back().r);
    std::size_t const m = f.samples.size() - 1;
    double const h = (hi - lo) / static_cast<double>(m);
    double s = 0.0;
    for (std::size_t i = 0; i <= m; ++i) {
        double const w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        auto const& x = f.samples[i];
        s += w * x.R * x.R * x.r; // dr = r dx
    }
    return s * h / 3.0;
}

std::vector<double> log_grid(double lo, double hi, std::size_t intervals)
{
    std::vector<double> g(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / intervals);
    g.back() = hi;
    return g;
}

} // namespace

TEST(Jacobi, LowDegree)
{
    EXPECT_EQ(jacobi(0, 3.7, -0.2, 0.4), 1.0);
    EXPECT_DOUBLE_EQ(jacobi(1, 2.0, 3.0, 0.0), -0.5);
}

TEST(Jacobi, ExplicitSumOracle)
{
    for (double x = -1.0; x <= 1.0; x += 0.125) {
        EXPECT_NEAR(jacobi(4, 0.3, 1.7, x), jacobi_sum(4, 0.3, 1.7, x), 1e-11) << x;
    }
    for (int n = 0; n <= 6; ++n) {
        for (double x : {-0.9, -0.2, 0.37, 0.99}) {
            double const ref = jacobi_sum(n, 39.28, 2.87, x);
            EXPECT_NEAR(jacobi(n, 39.28, 2.87, x), ref, 1e-12 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST(Jacobi, HighPrecisionOracle)
{
    EXPECT_NEAR(jacobi(4, 0.3, 1.7, 0.37), 0.26373258125, 1e-13);
    EXPECT_NEAR(jacobi(3, 39.28, 2.87, -0.6), -2.271744, 1e-11);
}

TEST(Jacobi, RejectsBadInput)
{
    EXPECT_THROW(jacobi(-1, 0, 0, 0), domain_error);
    EXPECT_THROW(jacobi(2, std::nan(""), 0, 0), domain_error);
    EXPECT_THROW(jacobi(2, 0, 0, INFINITY), domain_error);
}

TEST(Normalization, QuadratureOracle)
{
    // b int_0^1 z^(2 eps - 1) (1 - z)^(2 Lambda + 2) P_n^2 dz from an independent high-precision quadrature
    auto const p = table_params(0.025, 0.75);
    EXPECT_NEAR(normalization_quadrature(p, {0, 1}, case1), 1.0 / std::sqrt(1.0747704050842852e-5), 1e-8 * 305.0);
    EXPECT_NEAR(normalization_quadrature(p, {1, 2}, case1), 71.698926390524245, 1e-9 * 71.7);
    EXPECT_NEAR(normalization_quadrature(p, {2, 1}, case1), 12.135970355979385, 1e-9 * 12.1);
}

TEST(Normalization, BetaFunctionForNodeless)
{
    for (auto const& st : {quantum_state{0, 1}, quantum_state{0, 2}, quantum_state{0, 3}}) {
        auto const p = table_params(0.05, 1.5);
        auto const sol = energy_level(p, st, case1);
        double const eps = sol.epsilon_prime;
        double const L = sol.Lambda;
        double const beta = std::exp(std::lgamma(2 * eps) + std::lgamma(2 * L + 3) - std::lgamma(2 * eps + 2 * L + 3));
        EXPECT_NEAR(normalization_integral(0, eps, L, p.b).value / (p.b * beta), 1.0, 1e-10);
        EXPECT_NEAR(normalization_sum(0, eps, L, p.b) / (p.b * beta), 1.0, 1e-12);
    }
}

TEST(Normalization, ClosedFormAgreesWithQuadrature)
{
    for (auto const& row : published::table1) {
        auto const st = parse_state_label(row.state);
        if (st.n > 2) continue;
        auto const p = table_params(row.inv_b, 0.75);
        double const q = normalization_quadrature(p, st, case1);
        double const c = normalization_closed_form(p, st, case1);
        EXPECT_NEAR(c / q, 1.0, st.n == 0 ? 1e-8 : 1e-6) << row.state << " 1/b=" << row.inv_b;
    }
}

TEST(Normalization, RefinementIsConverged)
{
    auto const p = table_params(0.025, 0.75);
    auto const sol = energy_level(p, {1, 2}, case1);
    double const coarse = normalization_integral(1, sol.epsilon_prime, sol.Lambda, p.b, 1e-9).value;
    double const fine = normalization_integral(1, sol.epsilon_prime, sol.Lambda, p.b, 1e-12).value;
    EXPECT_NEAR(std::sqrt(coarse / fine), 1.0, 1e-9);
}

TEST(Normalization, LiteratureSumDiffersByKnownFactor)
{
    auto const p = table_params(0.025, 0.75);
    auto const sol = energy_level(p, {0, 1}, case1);
    double const eps = sol.epsilon_prime;
    double const L = sol.Lambda;
    double const printed = literature_normalization_sum(0, eps, L, p.b);
    double const correct = normalization_sum(0, eps, L, p.b);
    EXPECT_NEAR(printed / correct, 2 * eps, 1e-10 * eps);
}

TEST(Normalization, SumIsPositiveForBoundStates)
{
    for (auto const& row : published::table1) {
        auto const st = parse_state_label(row.state);
        for (double alpha : published::table1_alphas) {
            auto const p = table_params(row.inv_b, alpha);
            auto const sol = energy_level(p, st, case1);
            EXPECT_GT(normalization_sum(st.n, sol.epsilon_prime, sol.Lambda, p.b), 0.0);
        }
    }
}

TEST(RadialFunction, UnitNormInRSpace)
{
    auto const p = table_params(0.025, 0.75);
    for (auto const& [st, sol] : enumerate_bound_states(p, case1, 4)) {
        if (st.l == 0) continue;
        double const hi = std::max(60.0 * p.b, 60.0 * p.b / sol.epsilon_prime);
        auto const f = radial_wavefunction(p, st, case1, log_grid(1e-6 * p.b, hi, 20000));
        EXPECT_NEAR(r_space_norm(f), 1.0, 1e-8) << spectroscopic_label(st);
    }
}

TEST(RadialFunction, NodeCounts)
{
    auto const p = table_params(0.025, 0.75);
    for (int n = 0; n <= 2; ++n) {
        for (int l = 1; l <= 4; ++l) {
            quantum_state const st{n, l};
            auto const sol = energy_level(p, st, case1);
            auto const f = radial_wavefunction(p, st, case1, default_grid(p.b, sol.epsilon_prime));
            EXPECT_EQ(count_nodes(f.samples), n) << spectroscopic_label(st);
        }
    }
}

TEST(RadialFunction, BoundaryDecay)
{
    auto const p = table_params(0.025, 0.75);
    auto const sol = energy_level(p, {1, 2}, case1);
    std::vector<double> grid{1e-6 * p.b, 1e-3 * p.b};
    for (double r = 10 * p.b; r < 40 * p.b; r += p.b) grid.push_back(r);
    auto const f = radial_wavefunction(p, {1, 2}, case1, grid);
    EXPECT_LT(std::abs(f.samples[0].R), std::abs(f.samples[1].R));
    // P_1^(a, b)(1) = a + 1 bounds the polynomial factor in the tail
    double const P1 = 2.0 * sol.epsilon_prime + 1.0;
    for (std::size_t i = 2; i < f.samples.size(); ++i) {
        double const bound = P1 * f.norm_constant * std::exp(-sol.epsilon_prime * f.samples[i].r / p.b) * 1.01;
        EXPECT_LE(std::abs(f.samples[i].R), bound);
    }
}

TEST(RadialFunction, SmallRPowerLaw)
{
    auto const p = table_params(0.025, 1.5);
    auto const sol = energy_level(p, {0, 2}, case1);
    std::vector<double> grid{1e-6, 2e-6};
    auto const f = radial_wavefunction(p, {0, 2}, case1, grid);
    EXPECT_NEAR(std::log(f.samples[1].R / f.samples[0].R) / std::log(2.0), 1.0 + sol.Lambda, 1e-5);
}

TEST(RadialFunction, Errors)
{
    auto const p = table_params(0.025, 0.75);
    EXPECT_THROW(radial_wavefunction(p, {0, 1}, case1, std::vector<double>{}), domain_error);
    EXPECT_THROW(radial_wavefunction(p, {0, 1}, case1, std::vector<double>{2.0, 1.0}), domain_error);
    EXPECT_THROW(radial_wavefunction(p, {30, 1}, case1, std::vector<double>{1.0}), unbound_state_error);
}

TEST(RadialFunction, SinglePointGrid)
{
    auto const p = table_params(0.025, 0.75);
    auto const f = radial_wavefunction(p, {0, 1}, case1, std::vector<double>{3.0});
    ASSERT_EQ(f.samples.size(), 1u);
    EXPECT_GT(f.samples[0].R, 0.0);
}

TEST(Hulthen, MatchesAlphaOne)
{
    std::vector<double> grid;
    for (int i = 1; i <= 50; ++i) grid.push_back(2.0 * i);
    for (auto const& st : {quantum_state{0, 1}, quantum_state{1, 2}, quantum_state{2, 0}}) {
        auto const h = hulthen_wavefunction(1.0, 0.025, st, grid);
        for (double alpha : {0.0, 1.0}) {
            auto const m = radial_wavefunction(table_params(0.025, alpha), st, case1, grid);
            for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(h.samples[i].R, m.samples[i].R, 1e-12);
        }
    }
}

TEST(Hulthen, GroundStateExponent)
{
    double const delta = 0.05;
    auto const f = hulthen_wavefunction(1.0, delta, {0, 0}, std::vector<double>{1.0});
    EXPECT_NEAR(f.epsilon_prime, 1.0 / delta - 0.5, 1e-14);
}

TEST(Hulthen, CoulombShapeAtSmallScreening)
{
    double const delta = 1e-4;
    std::vector<double> grid;
    for (double r = 0.1; r <= 20.0; r += 0.1) grid.push_back(r);
    // hydrogen R_10 = 2 e^{-r}, R_21 = r e^{-r/2} / (2 sqrt 6), R_20 = (1 - r/2) e^{-r/2} / sqrt 2, all times r for |R|^2 dr
    auto const s1 = hulthen_wavefunction(1.0, delta, {0, 0}, grid);
    auto const p2 = hulthen_wavefunction(1.0, delta, {0, 1}, grid);
    auto const s2 = hulthen_wavefunction(1.0, delta, {1, 0}, grid);
    double const sign2 = s2.samples[0].R > 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double const r = grid[i];
        EXPECT_NEAR(s1.samples[i].R, 2.0 * r * std::exp(-r), 1e-3);
        EXPECT_NEAR(p2.samples[i].R, r * r * std::exp(-r / 2) / (2.0 * std::sqrt(6.0)), 1e-3);
        EXPECT_NEAR(sign2 * s2.samples[i].R, r * (1 - r / 2) * std::exp(-r / 2) / std::sqrt(2.0), 1e-3);
    }
}

TEST(Hulthen, Unbound)
{
    EXPECT_THROW(hulthen_wavefunction(1.0, 1.0, {2, 0}, std::vector<double>{1.0}), unbound_state_error);
}

TEST(DefaultGrid, Convention)
{
    auto const g = default_grid(40.0, 19.6);
    EXPECT_EQ(g.size(), 4000u);
    EXPECT_NEAR(g.front(), 4e-3, 1e-15);
    EXPECT_EQ(g.back(), 2400.0);
    EXPECT_EQ(default_grid(40.0, 0.1).back(), 16000.0);
}
