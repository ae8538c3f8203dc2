#include <cmath>

#include "diraccmp/dirac1d.hpp"
#include "doctest.h"
#include "support/norms.hpp"
#include "support/residual.hpp"
#include "support/schrodinger_oracle.hpp"

using namespace diraccmp;

namespace {

oracle::CoeffFn coeffs_1d(const PotentialSpec& V, int s, double m, double E) {
    return [V, s, m, E](double x, double& a11, double& a12, double& a21) {
        const double v = eval(V, x);
        a11 = 0.0;
        a12 = -(E + m - (1 - s) * v);
        a21 = E - m - (1 + s) * v;
    };
}

// Cross-checks the solver eigenvalue through the second-order reduction
// solved by the independent Numerov oracle.
double numerov_energy(const BoundState1D& st, const PotentialSpec& V) {
    const auto ep = reduce_to_schrodinger_1d(V, st.mode, st.mass, st.E);
    const double X = st.phi1.grid.back();
    // boundary condition of the housed component at the origin
    const bool housed_vanishes = st.mode.q() == st.parity;
    const auto start = housed_vanishes ? oracle::start_odd()
                                       : oracle::start_even(ep.potential);
    const double eps = oracle::eigenvalue_near(
        ep.potential, ep.effective_eigenvalue,
        0.1 * std::max(1.0, std::abs(ep.effective_eigenvalue)), 0.0, X, 20000,
        start);
    const double mag = std::sqrt(eps + st.mass * st.mass);
    return st.E >= 0 ? mag : -mag;
}

}  // namespace

TEST_CASE("harmonic ground state matches the reference eigenvalue") {
    const auto V = PotentialSpec::harmonic(0.5);
    const auto st = solve_ground_1d(V, SymmetryMode(+1), 1.2);
    CHECK(st.E == doctest::Approx(1.77935).epsilon(1e-4 / 1.77935));
    CHECK(st.nodes1 == 0);
    CHECK(st.parity == 2);  // phi2 odd, housed phi1 even

    // eigenvalue lies in the class-2 window sE > m
    const auto win = energy_window(classify(V, st.mode), st.mode, st.mass);
    CHECK(win.contains(st.E));

    // full-line normalization (independent composite quadrature)
    const double norm = 2.0 * oracle::half_line_norm(
                                  st.phi1.grid.points, st.phi1.values,
                                  st.phi2.values);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-7));

    // designated-component monotonicity
    CHECK(check_lemma1(st, st.mode).monotone);

    // ODE residual on the stored grid
    const double res = oracle::coupled_residual(
        st.phi1.grid.points, st.phi1.values, st.phi2.values,
        coeffs_1d(V, +1, st.mass, st.E));
    CHECK(res < 1e-8);

    // independent second-order cross-check
    CHECK(numerov_energy(st, V) == doctest::Approx(st.E).epsilon(5e-5 / st.E));
    const auto ep = reduce_to_schrodinger_1d(V, st.mode, st.mass, st.E);
    CHECK(ep.effective_eigenvalue ==
          doctest::Approx(1.72609).epsilon(3e-4 / 1.72609));
}

TEST_CASE("sine-modulated partner matches the reference eigenvalue") {
    const auto V = PotentialSpec::sine_modulated_harmonic(0.5, 1.64);
    const auto st = solve_ground_1d(V, SymmetryMode(+1), 1.2);
    CHECK(st.E == doctest::Approx(1.85470).epsilon(1e-4 / 1.85470));
    CHECK(st.nodes1 == 0);
    CHECK(check_lemma1(st, st.mode).monotone);
    const double res = oracle::coupled_residual(
        st.phi1.grid.points, st.phi1.values, st.phi2.values,
        coeffs_1d(V, +1, st.mass, st.E));
    // the oscillating factor raises the finite-difference truncation term
    CHECK(res < 1e-6);
    CHECK(numerov_energy(st, V) == doctest::Approx(st.E).epsilon(5e-5 / st.E));
}

TEST_CASE("pseudo-spin harmonic ground state sits in the class-3 window") {
    const auto V = PotentialSpec::harmonic(0.5);
    const auto st = solve_ground_1d(V, SymmetryMode(-1), 1.2);
    const auto win = energy_window(classify(V, st.mode), st.mode, st.mass);
    CHECK(win.contains(st.E));
    CHECK(st.nodes2 == 0);  // housed component for s = -1
    CHECK(check_lemma1(st, st.mode).monotone);
    CHECK(numerov_energy(st, V) ==
          doctest::Approx(st.E).epsilon(5e-5 / std::abs(st.E)));
}

TEST_CASE("class-1 potential yields a bound state inside (-m, m)") {
    const auto V = PotentialSpec::cutoff_coulomb(1.5, 0.8);
    const auto st = solve_ground_1d(V, SymmetryMode(+1), 1.0);
    CHECK(st.E > -1.0);
    CHECK(st.E < 1.0);
    CHECK(st.nodes1 == 0);
    const double norm = 2.0 * oracle::half_line_norm(
                                  st.phi1.grid.points, st.phi1.values,
                                  st.phi2.values);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS(solve_ground_1d(PotentialSpec::zero_potential(), SymmetryMode(+1),
                                 1.0));  // no class, no bound state
    CHECK_THROWS_AS(
        solve_ground_1d(PotentialSpec::coulomb(0.3), SymmetryMode(+1), 1.0),
        std::invalid_argument);  // singular at the 1D origin
    CHECK_THROWS_AS(
        solve_ground_1d(PotentialSpec::harmonic(0.5), SymmetryMode(+1), -1.0),
        std::invalid_argument);
    CHECK_THROWS_AS(solve_ground_1d(PotentialSpec::harmonic(0.5), SymmetryMode(+1),
                                    1.0, ParityChoice{3}),
                    std::invalid_argument);
}

TEST_CASE("fixed parity reproduces the auto selection; the other lies higher") {
    const auto V = PotentialSpec::harmonic(0.5);
    const auto st_auto = solve_ground_1d(V, SymmetryMode(+1), 1.2);
    const auto st2 = solve_ground_1d(V, SymmetryMode(+1), 1.2, ParityChoice{2});
    CHECK(st2.E == doctest::Approx(st_auto.E).epsilon(1e-10));
    const auto st1 = solve_ground_1d(V, SymmetryMode(+1), 1.2, ParityChoice{1});
    CHECK(st1.E > st_auto.E);
}

TEST_CASE("solves are deterministic") {
    const auto V = PotentialSpec::harmonic(0.5);
    const auto a = solve_ground_1d(V, SymmetryMode(+1), 1.2);
    const auto b = solve_ground_1d(V, SymmetryMode(+1), 1.2);
    CHECK(a.E == b.E);
    REQUIRE(a.phi1.size() == b.phi1.size());
    CHECK(a.phi1.values[a.phi1.size() / 2] == b.phi1.values[b.phi1.size() / 2]);
    CHECK(a.phi2.values[a.phi2.size() / 3] == b.phi2.values[b.phi2.size() / 3]);
}

TEST_CASE("node_count counts strict sign changes above the noise floor") {
    // constant-sign bump
    std::vector<double> xs, bump, sine;
    for (int i = 0; i <= 200; ++i) {
        const double x = 2.0 * 3.14159265358979323846 * i / 200.0;
        xs.push_back(x);
        bump.push_back(std::exp(-(x - 3.0) * (x - 3.0)));
        sine.push_back(std::sin(x));
    }
    CHECK(node_count(SampledFunction(Grid(xs), bump)) == 0);
    // sin on [0, 2 pi]: one interior sign change (endpoint zeros ignored)
    CHECK(node_count(SampledFunction(Grid(xs), sine)) == 1);
    // tiny oscillations below 1e-12 * max|f| are not nodes
    std::vector<double> noisy = bump;
    for (std::size_t i = 0; i < noisy.size(); i += 2) noisy[i] += 1e-15;
    for (std::size_t i = 0; i < 5; ++i) noisy[i] = (i % 2 ? 1.0 : -1.0) * 1e-16;
    CHECK(node_count(SampledFunction(Grid(xs), noisy)) == 0);
}

TEST_CASE("reduction exposes the effective potential and eigenvalue") {
    const auto ep0 = reduce_to_schrodinger_1d(PotentialSpec::zero_potential(),
                                              SymmetryMode(+1), 1.0, 0.5);
    CHECK(ep0.potential(1.7) == 0.0);
    CHECK(ep0.effective_eigenvalue == doctest::Approx(0.25 - 1.0));
    CHECK(ep0.housed_component == 1);

    const auto epm = reduce_to_schrodinger_1d(PotentialSpec::harmonic(0.5),
                                              SymmetryMode(-1), 1.0, 1.5);
    CHECK(epm.housed_component == 2);
    // 2 V (E + s m) = 2 * (0.5 * 2^2) * (1.5 - 1.0)
    CHECK(epm.potential(2.0) == doctest::Approx(2.0 * 2.0 * 0.5));
}

TEST_CASE("a state with a node fails the monotonicity check") {
    std::vector<double> xs, v1, v2;
    for (int i = 0; i <= 400; ++i) {
        const double x = 8.0 * i / 400.0;
        xs.push_back(x);
        v1.push_back(x * std::exp(-x) * (1.0 - x));  // one interior node
        v2.push_back(std::exp(-x));
    }
    BoundState1D st;
    st.phi1 = SampledFunction(Grid(xs), v1);
    st.phi2 = SampledFunction(Grid(xs), v2);
    st.mode = SymmetryMode(+1);
    CHECK_FALSE(check_lemma1(st, st.mode).monotone);
}
