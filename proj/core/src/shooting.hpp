#pragma once

// Internal two-sided shooting engine shared by the 1D and radial
// solvers. The coupled system is written as y' = [[a11, a12], [a21,
// -a11]] y; outward integration starts from origin data (exact parity
// data in 1D, a two-term Frobenius series in d > 1), inward integration
// starts from the decaying frozen-coefficient eigenvector at R_max, and
// eigenvalues are sign changes of the normalized Wronskian mismatch at
// the turning point.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "diraccmp/numerics.hpp"
#include "diraccmp/potentials.hpp"
#include "diraccmp/solver_common.hpp"
#include "rk45.hpp"

namespace diraccmp::detail {

// Fills the traceless coefficient matrix of the system at (E, r).
using CoeffFn = std::function<void(double E, double r, double& a11, double& a12,
                                   double& a21)>;

struct EngineDef {
    CoeffFn coeffs;
    // Outward start: (r_start, y_start) for a given E.
    std::function<std::pair<double, std::array<double, 2>>(double)> origin_start;
    double geometry_scan_start = 0.0;  // where the turning-point scan begins
    double char_length = 1.0;
    double r_cap = 1e4;     // hard cap on the integration domain
    double action_target = 40.0;  // WKB action past the turning point
    bool halfline_double_norm = false;  // 1D: full-line norm doubles
};

struct AssembledState {
    double E = 0.0;
    std::vector<double> grid;
    std::vector<double> c1, c2;
    double r_match = 0.0, r_max = 0.0;
    int nodes1 = 0, nodes2 = 0;
};

inline int count_nodes(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    const double thresh = 1e-12 * m;
    int n = 0, last = 0;
    for (double x : v) {
        if (std::abs(x) <= thresh) continue;
        const int s = x > 0 ? 1 : -1;
        if (last != 0 && s != last) ++n;
        last = s;
    }
    return n;
}

// Directional monotonicity of a sampled component: the dominant trend
// sets the direction, discrete differences against it beyond
// tol * max|f| count as violations.
inline MonotonicityReport monotonicity(const std::vector<double>& f,
                                       double tol = 1e-9) {
    MonotonicityReport rep;
    if (f.size() < 2) {
        rep.monotone = true;
        return rep;
    }
    double m = 0.0, up = 0.0, down = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    if (m == 0.0) {
        rep.monotone = true;
        return rep;
    }
    for (std::size_t i = 1; i < f.size(); ++i) {
        const double d = f[i] - f[i - 1];
        (d > 0 ? up : down) += std::abs(d);
    }
    const double dir = up >= down ? 1.0 : -1.0;
    rep.monotone = true;
    for (std::size_t i = 1; i < f.size(); ++i) {
        const double d = dir * (f[i] - f[i - 1]);
        if (d < -tol * m) {
            rep.monotone = false;
            rep.max_violation = std::max(rep.max_violation, -d / m);
        }
    }
    return rep;
}

class ShootingEngine {
  public:
    ShootingEngine(EngineDef def, SolverConfig cfg)
        : def_(std::move(def)), cfg_(cfg) {}

    double lambda2(double E, double r) const {
        double a11, a12, a21;
        def_.coeffs(E, r, a11, a12, a21);
        return a11 * a11 + a12 * a21;
    }

    struct Geometry {
        double r_match, r_max;
    };

    // Matching point: the last sign change of lambda^2 (outer turning
    // point), or its minimizer when the frozen-coefficient rate never
    // vanishes. Domain end: enough accumulated decay action past the
    // matching point that the inward leg reaches ~e^{-action_target}.
    Geometry geometry(double E) const {
        const double ls = def_.char_length;
        double r = std::max(def_.geometry_scan_start, 1e-4 * ls);
        double v = lambda2(E, r);
        double argmin = r, minval = v, reset_level = v;
        double turning = -1.0, action = 0.0;
        for (int it = 0; it < 400000; ++it) {
            const double dr = std::max(0.005 * ls, 0.02 * r);
            const double rn = r + dr;
            const double vn = lambda2(E, rn);
            if (v != 0 && vn != 0 && (v > 0) != (vn > 0)) {
                turning = rn;
                action = 0.0;
                reset_level = std::abs(vn);
            }
            if (vn < minval) {
                minval = vn;
                argmin = rn;
            }
            // restart the action tally when the rate drops substantially
            // below its level at the last restart (we are still inside or
            // approaching the well, not past it); the halving threshold
            // keeps a monotone approach to an asymptote from resetting
            // forever
            if (turning < 0 && vn > 0 && vn < 0.5 * reset_level) {
                action = 0.0;
                reset_level = vn;
            }
            if (vn > 0) {
                action += std::sqrt(vn) * dr;
                if (action >= def_.action_target)
                    return {turning >= 0 ? turning : argmin, rn};
            }
            r = rn;
            v = vn;
            if (r >= def_.r_cap) break;
        }
        const double rm = turning >= 0 ? turning : argmin;
        return {rm, std::max(std::min(def_.r_cap, r), 2 * rm)};
    }

    double mismatch(double E) {
        const auto geo = geometry(E);
        auto yo = integrate_leg(E, outward_start(E), geo.r_match);
        auto yi = integrate_leg(E, inward_start(E, geo.r_max), geo.r_match);
        const double no = std::hypot(yo[0], yo[1]);
        const double ni = std::hypot(yi[0], yi[1]);
        if (no == 0 || ni == 0) return 0.0;
        return (yo[0] * yi[1] - yo[1] * yi[0]) / (no * ni);
    }

    AssembledState assemble(double E) {
        const auto geo = geometry(E);
        auto start = outward_start(E);
        // Grid: geometric refinement near a singular origin, uniform
        // elsewhere (the uniform section supports finite-difference
        // residual checks).
        const int nseg = cfg_.assembly_segments;
        const double h = (geo.r_max - 0.0) / nseg;
        std::vector<double> grid;
        const double r0 = start.first;
        if (r0 > 0) {
            const double rb = std::max(h, r0 * 1.001);
            const int ng = 128;
            for (int k = 0; k < ng; ++k)
                grid.push_back(r0 * std::pow(rb / r0, double(k) / ng));
            double u = rb;
            while (u < geo.r_max - 0.5 * h) {
                grid.push_back(u);
                u += h;
            }
            grid.push_back(geo.r_max);
        } else {
            for (int k = 0; k <= nseg; ++k) grid.push_back(k * h);
        }
        const std::size_t im = static_cast<std::size_t>(
            std::lower_bound(grid.begin(), grid.end(), geo.r_match) - grid.begin());
        const std::size_t imatch = std::min(im, grid.size() - 2);

        std::vector<double> c1(grid.size()), c2(grid.size());
        double norm_out = 0, norm_in = 0;

        // outward leg with a norm accumulator
        std::array<double, 3> y{start.second[0], start.second[1], 0.0};
        c1[0] = y[0];
        c2[0] = y[1];
        for (std::size_t k = 1; k <= imatch; ++k) {
            step_to(E, grid[k - 1], grid[k], y);
            c1[k] = y[0];
            c2[k] = y[1];
        }
        const std::array<double, 2> yo{y[0], y[1]};
        norm_out = y[2];

        // inward leg
        auto si = inward_start(E, geo.r_max);
        std::array<double, 3> z{si.second[0], si.second[1], 0.0};
        c1.back() = z[0];
        c2.back() = z[1];
        for (std::size_t k = grid.size() - 1; k > imatch; --k) {
            step_to(E, grid[k], grid[k - 1], z);
            c1[k - 1] = z[0];
            c2[k - 1] = z[1];
        }
        norm_in = z[2];

        // splice: scale the inward branch onto the outward one
        const double f = std::abs(z[0]) > std::abs(z[1]) ? yo[0] / z[0] : yo[1] / z[1];
        for (std::size_t k = imatch; k < grid.size(); ++k) {
            c1[k] = (k == imatch) ? yo[0] : c1[k] * f;
            c2[k] = (k == imatch) ? yo[1] : c2[k] * f;
        }
        double total = norm_out + f * f * std::abs(norm_in);
        if (def_.halfline_double_norm) total *= 2.0;
        const double scale = 1.0 / std::sqrt(total);
        for (auto& v : c1) v *= scale;
        for (auto& v : c2) v *= scale;

        AssembledState st;
        st.E = E;
        st.grid = std::move(grid);
        st.c1 = std::move(c1);
        st.c2 = std::move(c2);
        st.r_match = geo.r_match;
        st.r_max = geo.r_max;
        st.nodes1 = count_nodes(st.c1);
        st.nodes2 = count_nodes(st.c2);
        return st;
    }

    // Scans the window in the given direction and returns the first
    // eigenstate accepted by `ok`. direction +1 scans upward from lo,
    // -1 downward from hi (used for windows unbounded below, where the
    // bottom of the spectrum sits nearest the finite edge).
    std::optional<AssembledState> solve(double lo, double hi, int direction,
                                        const std::function<bool(const AssembledState&)>& ok) {
        const double margin = 1e-6;
        auto process_segment = [&](double a, double b,
                                   int n) -> std::optional<AssembledState> {
            std::vector<double> es(n + 1), ms(n + 1);
            for (int i = 0; i <= n; ++i) {
                es[i] = a + (b - a) * i / n;
                ms[i] = mismatch(es[i]);
            }
            std::vector<int> order(n);
            for (int i = 0; i < n; ++i) order[i] = i;
            if (direction < 0) std::reverse(order.begin(), order.end());
            for (int i : order) {
                if (ms[i] == 0 || ms[i + 1] == 0) continue;
                if ((ms[i] > 0) == (ms[i + 1] > 0)) continue;
                try {
                    const double root = find_root_bracketed(
                        [this](double e) { return mismatch(e); }, es[i], es[i + 1],
                        cfg_.eig_tol);
                    auto st = assemble(root);
                    if (ok(st)) return st;
                } catch (const SolverError&) {
                    // unassemblable candidate (typically an artifact near a
                    // window edge): keep scanning
                }
            }
            return std::nullopt;
        };

        if (std::isfinite(lo) && std::isfinite(hi)) {
            return process_segment(lo + margin * (hi - lo), hi - margin * (hi - lo),
                                   cfg_.scan_points);
        }
        // half-open window: expand away from the finite edge
        const double edge = direction > 0 ? lo : hi;
        double span = 2.0 * std::max({1.0, std::abs(edge), def_.char_length});
        double base = edge + direction * margin * std::max(1.0, std::abs(edge));
        for (int round = 0; round < 10; ++round) {
            const double far = base + direction * span;
            auto st = direction > 0 ? process_segment(base, far, cfg_.scan_points)
                                    : process_segment(far, base, cfg_.scan_points);
            if (st) return st;
            base = far;
            span *= 2.0;
        }
        return std::nullopt;
    }

  private:
    std::pair<double, std::array<double, 2>> outward_start(double E) {
        auto s = def_.origin_start(E);
        const double n = std::hypot(s.second[0], s.second[1]);
        s.second[0] /= n;
        s.second[1] /= n;
        align(s.second, ref_out_);
        return s;
    }

    std::pair<double, std::array<double, 2>> inward_start(double E, double R) {
        double a11, a12, a21;
        def_.coeffs(E, R, a11, a12, a21);
        const double l2 = a11 * a11 + a12 * a21;
        const double lam = -std::sqrt(std::max(l2, 0.0));
        std::array<double, 2> v1{a12, lam - a11};
        std::array<double, 2> v2{a11 + lam, a21};
        auto v = std::hypot(v1[0], v1[1]) >= std::hypot(v2[0], v2[1]) ? v1 : v2;
        const double n = std::hypot(v[0], v[1]);
        v[0] /= n;
        v[1] /= n;
        align(v, ref_in_);
        return {R, v};
    }

    // Keeps the start vectors on one orientation branch across energies
    // so that scan brackets are genuine mismatch sign changes.
    static void align(std::array<double, 2>& v,
                      std::optional<std::array<double, 2>>& ref) {
        if (!ref) {
            ref = v;
            return;
        }
        if (v[0] * (*ref)[0] + v[1] * (*ref)[1] < 0) {
            v[0] = -v[0];
            v[1] = -v[1];
        }
    }

    // Integrates one shooting leg, renormalizing in chunks: only the
    // direction at the matching point matters, and the growing mode can
    // amplify the solution by many orders of magnitude.
    std::array<double, 2> integrate_leg(double E, std::pair<double, std::array<double, 2>> start,
                                        double target) {
        std::array<double, 2> y = start.second;
        constexpr int kChunks = 16;
        for (int c = 1; c <= kChunks; ++c) {
            const double xt =
                start.first + (target - start.first) * c / kChunks;
            const auto status = rk45<2>(
                [&](double r, const std::array<double, 2>& u) {
                    double a11, a12, a21;
                    def_.coeffs(E, r, a11, a12, a21);
                    return std::array<double, 2>{a11 * u[0] + a12 * u[1],
                                                 a21 * u[0] - a11 * u[1]};
                },
                start.first + (target - start.first) * (c - 1) / kChunks, y, xt,
                cfg_.abs_tol, cfg_.rel_tol, 0.0,
                [](double, const std::array<double, 2>&) {});
            if (status != RkStatus::ok)
                throw SolverError(
                    std::string("shooting leg failed to integrate (") +
                        (status == RkStatus::overflow ? "overflow" : "step underflow") +
                        " at E=" + std::to_string(E) + ")",
                    E, E);
            const double n = std::hypot(y[0], y[1]);
            if (n > 0) {
                y[0] /= n;
                y[1] /= n;
            }
        }
        return y;
    }

    void step_to(double E, double from, double to, std::array<double, 3>& y) {
        const auto status = rk45<3>(
            [&](double r, const std::array<double, 3>& u) {
                double a11, a12, a21;
                def_.coeffs(E, r, a11, a12, a21);
                return std::array<double, 3>{a11 * u[0] + a12 * u[1],
                                             a21 * u[0] - a11 * u[1],
                                             u[0] * u[0] + u[1] * u[1]};
            },
            from, y, to, cfg_.abs_tol, cfg_.rel_tol, 0.0,
            [](double, const std::array<double, 3>&) {});
        if (status != RkStatus::ok)
            throw SolverError("wavefunction assembly failed to integrate", E, E);
    }

    EngineDef def_;
    SolverConfig cfg_;
    std::optional<std::array<double, 2>> ref_out_, ref_in_;
};

}  // namespace diraccmp::detail
