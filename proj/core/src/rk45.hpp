#pragma once

// Internal Dormand-Prince 5(4) stepper over a fixed-size state vector.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace diraccmp::detail {

inline constexpr double kOverflowGuard = 1e250;

enum class RkStatus { ok, overflow, step_underflow };

// Integrates y' = rhs(x, y) from x0 to x1 (either direction). Calls
// on_accept(x, y) after each accepted step. rhs: (double, const
// std::array<double,N>&) -> std::array<double,N>.
template <std::size_t N, class Rhs, class Accept>
RkStatus rk45(Rhs&& rhs, double x0, std::array<double, N>& y, double x1,
              double abs_tol, double rel_tol, double max_step, Accept&& on_accept) {
    if (x0 == x1) return RkStatus::ok;
    const double dir = x1 > x0 ? 1.0 : -1.0;
    const double span = std::abs(x1 - x0);
    double h = std::min(span / 16.0, max_step > 0 ? max_step : span);
    double x = x0;
    auto k1 = rhs(x, y);

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // 4th-order weights (for the embedded error estimate)
    static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695,
                            e4 = 393.0 / 640, e5 = -92097.0 / 339200,
                            e6 = 187.0 / 2100, e7 = 1.0 / 40;

    while (dir * (x1 - x) > 0) {
        if (dir * (x + dir * h - x1) > 0) h = std::abs(x1 - x);
        const double hs = dir * h;

        std::array<double, N> t, k2, k3, k4, k5, k6, k7, y5;
        for (std::size_t i = 0; i < N; ++i) t[i] = y[i] + hs * a21 * k1[i];
        k2 = rhs(x + c2 * hs, t);
        for (std::size_t i = 0; i < N; ++i)
            t[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        k3 = rhs(x + c3 * hs, t);
        for (std::size_t i = 0; i < N; ++i)
            t[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = rhs(x + c4 * hs, t);
        for (std::size_t i = 0; i < N; ++i)
            t[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = rhs(x + c5 * hs, t);
        for (std::size_t i = 0; i < N; ++i)
            t[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                a64 * k4[i] + a65 * k5[i]);
        k6 = rhs(x + hs, t);
        for (std::size_t i = 0; i < N; ++i)
            y5[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                 b6 * k6[i]);
        k7 = rhs(x + hs, y5);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double y4 = y[i] + hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                           e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc =
                abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            const double d = (y5[i] - y4) / sc;
            err += d * d;
        }
        err = std::sqrt(err / N);

        if (err <= 1.0) {
            x += hs;
            y = y5;
            k1 = k7;  // FSAL
            on_accept(x, y);
            for (std::size_t i = 0; i < N; ++i)
                if (std::abs(y[i]) > kOverflowGuard) return RkStatus::overflow;
            // done: skip the controller, whose h may have been clamped to a
            // tiny final remainder that would trip the underflow check
            if (dir * (x1 - x) <= 0) return RkStatus::ok;
        }
        const double fac =
            err > 0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
        h *= fac;
        if (max_step > 0) h = std::min(h, max_step);
        if (h < 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x)))
            return RkStatus::step_underflow;
    }
    return RkStatus::ok;
}

}  // namespace diraccmp::detail
