#include "diraccmp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rk45.hpp"

namespace diraccmp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
struct GkNode {
    double x, gauss_w, kronrod_w;
};
constexpr GkNode kGk15[8] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

double gk15(const std::function<double(double)>& f, double a, double b,
            double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double y0 = f(mid);
    double g = kGk15[0].gauss_w * y0;
    double k = kGk15[0].kronrod_w * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGk15[i].x;
        const double yi = f(mid + dx) + f(mid - dx);
        g += kGk15[i].gauss_w * yi;
        k += kGk15[i].kronrod_w * yi;
    }
    g *= half;
    k *= half;
    err = std::pow(200.0 * std::abs(k - g), 1.5);
    return k;
}

double quad_recursive(const std::function<double(double)>& f, double a, double b,
                      double tol, int depth, const QuadratureConfig& cfg,
                      long& budget) {
    double err;
    const double v = gk15(f, a, b, err);
    if (err <= tol || depth >= cfg.max_depth) {
        if (depth >= cfg.max_depth && err > tol * 100)
            throw std::runtime_error("quad_adaptive: max_depth exceeded");
        return v;
    }
    // a wildly oscillatory integrand (e.g. a spuriously truncated
    // non-decaying tail) would otherwise subdivide without bound
    if (--budget <= 0)
        throw std::runtime_error("quad_adaptive: subdivision budget exhausted");
    const double mid = 0.5 * (a + b);
    return quad_recursive(f, a, mid, tol / 2, depth + 1, cfg, budget) +
           quad_recursive(f, mid, b, tol / 2, depth + 1, cfg, budget);
}

// Truncation point for an improper upper limit: the first R past which
// |f| stays below the threshold at three consecutive probe points.
double truncation_point(const std::function<double(double)>& f, double a,
                        const QuadratureConfig& cfg) {
    const double scale = std::max(1.0, std::abs(a));
    double r = a + scale;
    int quiet = 0;
    for (int k = 0; k < 600; ++k) {
        if (std::abs(f(r)) < cfg.truncation_threshold) {
            if (++quiet >= 3) return r;
        } else {
            quiet = 0;
        }
        r += std::max(scale, 0.05 * r);
        if (r > 1e12) break;
    }
    throw std::runtime_error(
        "quad_adaptive: non-decaying tail for improper integral");
}

}  // namespace

Grid::Grid(std::vector<double> pts) : points(std::move(pts)) {
    if (points.size() < 2) throw std::invalid_argument("Grid: need at least 2 points");
    if (points.front() < 0) throw std::invalid_argument("Grid: first point must be >= 0");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] <= points[i - 1])
            throw std::invalid_argument("Grid: points must be strictly increasing");
}

SampledFunction::SampledFunction(Grid g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (grid.size() != values.size())
        throw std::invalid_argument("SampledFunction: size mismatch");
}

double SampledFunction::operator()(double x) const {
    const auto& p = grid.points;
    if (x <= p.front()) return values.front();
    if (x >= p.back()) return values.back();
    const auto it = std::upper_bound(p.begin(), p.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - p.begin());
    const double t = (x - p[i - 1]) / (p[i] - p[i - 1]);
    return values[i - 1] + t * (values[i] - values[i - 1]);
}

double SampledFunction::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

SampledFunction OdeSolution::component(int which) const {
    std::vector<double> v(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) v[i] = y[i][which - 1];
    return SampledFunction(Grid(x), std::move(v));
}

OdeSolution integrate_ode(const OdeRhs& rhs, double x0, std::array<double, 2> y0,
                          double x1, const OdeConfig& config, bool store) {
    OdeSolution out;
    if (store) {
        out.x.push_back(x0);
        out.y.push_back(y0);
    }
    auto status = detail::rk45<2>(
        [&rhs](double x, const std::array<double, 2>& y) { return rhs(x, y); }, x0,
        y0, x1, config.abs_tol, config.rel_tol, config.max_step,
        [&](double x, const std::array<double, 2>& y) {
            if (store) {
                out.x.push_back(x);
                out.y.push_back(y);
            }
        });
    if (!store) {
        out.x = {x0, x1};
        out.y = {y0, y0};
    }
    out.y.back() = y0;
    if (status == detail::RkStatus::overflow) out.overflow = true;
    if (status == detail::RkStatus::step_underflow)
        throw std::runtime_error("integrate_ode: step underflow (singularity hit)");
    // backwards integration: return samples in increasing-x order
    if (store && x1 < x0) {
        std::reverse(out.x.begin(), out.x.end());
        std::reverse(out.y.begin(), out.y.end());
    }
    return out;
}

double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& config) {
    if (std::isinf(b)) b = truncation_point(f, a, config);
    if (a == b) return 0.0;
    double err;
    const double rough = gk15(f, a, b, err);
    const double tol =
        std::max(config.abs_tol, config.rel_tol * std::abs(rough));
    long budget = 2'000'000;
    return quad_recursive(f, a, b, tol, 0, config, budget);
}

OscillatoryResult quad_oscillatory(const std::function<double(double)>& f,
                                   const std::vector<double>& zeros,
                                   const QuadratureConfig& config) {
    if (zeros.size() < 2)
        throw std::invalid_argument("quad_oscillatory: need at least 2 zeros");
    OscillatoryResult out;
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
        if (zeros[i + 1] <= zeros[i])
            throw std::invalid_argument("quad_oscillatory: zeros must increase");
        const double lobe = quad_adaptive(f, zeros[i], zeros[i + 1], config);
        // sanity: interior value should match the lobe's sign
        const double mid = f(0.5 * (zeros[i] + zeros[i + 1]));
        if (lobe != 0.0 && mid != 0.0 && (lobe > 0) != (mid > 0) &&
            std::abs(lobe) > 1e3 * config.abs_tol)
            throw std::invalid_argument(
                "quad_oscillatory: provided zeros are not sign changes");
        out.total += lobe;
        out.lobes.push_back(std::abs(lobe));
    }
    return out;
}

double quad_alternating(const std::function<double(double)>& f,
                        const std::function<double(int)>& zero,
                        const QuadratureConfig& config) {
    // Partial sums of the signed lobe series, then repeated averaging:
    // plain truncation converges too slowly when lobes decay like 1/x.
    constexpr int kMaxLobes = 60;
    std::vector<double> partial;
    double sum = 0.0;
    double prev = zero(0);
    for (int k = 1; k <= kMaxLobes; ++k) {
        const double z = zero(k);
        const double lobe = quad_adaptive(f, prev, z, config);
        sum += lobe;
        partial.push_back(sum);
        prev = z;
        if (std::abs(lobe) < config.abs_tol) return sum;
    }
    std::vector<double> row = partial;
    while (row.size() > 1) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
    }
    return row.front();
}

double find_root_bracketed(const std::function<double(double)>& f, double lo,
                           double hi, double tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::invalid_argument("find_root_bracketed: no sign change at bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    // secant polish inside the final bracket
    if (fhi != flo) {
        const double x = hi - fhi * (hi - lo) / (fhi - flo);
        if (x > lo && x < hi) return x;
    }
    return 0.5 * (lo + hi);
}

std::vector<std::pair<double, double>> scan_sign_changes(
    const std::function<double(double)>& f, double a, double b, double step) {
    if (step <= 0) throw std::invalid_argument("scan_sign_changes: step must be > 0");
    std::vector<std::pair<double, double>> out;
    double x0 = a, f0 = f(a);
    while (x0 < b) {
        const double x1 = std::min(x0 + step, b);
        const double f1 = f(x1);
        if (f0 != 0 && f1 != 0 && (f0 > 0) != (f1 > 0)) out.emplace_back(x0, x1);
        x0 = x1;
        f0 = f1;
    }
    return out;
}

}  // namespace diraccmp
