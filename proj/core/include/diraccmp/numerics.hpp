#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace diraccmp {

/// Strictly increasing abscissae on [0, R_max].
struct Grid {
    std::vector<double> points;

    Grid() = default;
    explicit Grid(std::vector<double> pts);

    std::size_t size() const { return points.size(); }
    double front() const { return points.front(); }
    double back() const { return points.back(); }
};

/// Real values sampled on a Grid, one per point.
struct SampledFunction {
    Grid grid;
    std::vector<double> values;

    SampledFunction() = default;
    SampledFunction(Grid g, std::vector<double> v);

    std::size_t size() const { return values.size(); }

    /// Piecewise-linear interpolation; clamps outside the grid range.
    double operator()(double x) const;

    double max_abs() const;
};

struct QuadratureConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-10;
    int max_depth = 60;
    double truncation_threshold = 1e-14;
};

struct OdeConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-10;
    double max_step = 0.0;  // 0 = unlimited
};

using OdeRhs = std::function<std::array<double, 2>(double, const std::array<double, 2>&)>;

/// Solution of a two-component linear ODE sampled on the accepted steps.
struct OdeSolution {
    std::vector<double> x;
    std::vector<std::array<double, 2>> y;
    bool overflow = false;  // a component exceeded the overflow guard

    std::array<double, 2> final_state() const { return y.back(); }
    SampledFunction component(int which) const;
};

/// Integrates y' = rhs(x, y) from (x0, y0) to x1 with an embedded
/// Runge-Kutta 4(5) pair and local error control. x1 < x0 integrates
/// backwards. On component overflow the integration stops early with
/// overflow = true (the shooting solvers rely on that signal).
OdeSolution integrate_ode(const OdeRhs& rhs, double x0, std::array<double, 2> y0,
                          double x1, const OdeConfig& config = {}, bool store = true);

/// Adaptive Gauss-Kronrod quadrature of f on [a, b]. Pass b = +infinity
/// for an improper integral: the upper limit is truncated where |f|
/// stays below config.truncation_threshold.
double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& config = {});

struct OscillatoryResult {
    double total = 0.0;               // signed sum over the provided lobes
    std::vector<double> lobes;        // absolute area of each lobe
};

/// Integrates f lobe-by-lobe between consecutive entries of `zeros`
/// (which must bracket the sign changes of f). Returns the signed total
/// and the per-lobe absolute areas for nonincreasing-sequence checks.
OscillatoryResult quad_oscillatory(const std::function<double(double)>& f,
                                   const std::vector<double>& zeros,
                                   const QuadratureConfig& config = {});

/// Improper integral of an oscillatory f whose k-th sign change is
/// zero(k), k = 0, 1, 2, ... (zero(0) is the lower limit). Sums lobes
/// with repeated-averaging acceleration of the alternating series.
double quad_alternating(const std::function<double(double)>& f,
                        const std::function<double(int)>& zero,
                        const QuadratureConfig& config = {});

/// Bisection root finder; requires f(lo) * f(hi) < 0.
double find_root_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, double tol);

/// Scans [a, b] with the given step and returns every subinterval whose
/// endpoint values have opposite signs.
std::vector<std::pair<double, double>> scan_sign_changes(
    const std::function<double(double)>& f, double a, double b, double step);

}  // namespace diraccmp
