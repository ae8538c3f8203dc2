#pragma once

// Half-line norm integral of a two-component state sampled on a solver
// grid (an optional geometric prefix followed by a uniform section):
// composite Simpson on the uniform run, trapezoid elsewhere. Used to
// verify normalization independently of the solver's accumulator.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

inline double half_line_norm(const std::vector<double>& r,
                             const std::vector<double>& c1,
                             const std::vector<double>& c2) {
    const std::size_t n = r.size();
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = c1[i] * c1[i] + c2[i] * c2[i];

    const double href = r[n / 2 + 1] - r[n / 2];
    auto uniform = [&](std::size_t i) {
        return std::abs((r[i + 1] - r[i]) - href) < 1e-9 * href;
    };
    std::size_t lo = n / 2;
    while (lo > 0 && uniform(lo - 1)) --lo;
    std::size_t hi = n / 2;
    while (hi + 1 < n && uniform(hi)) ++hi;

    double total = 0.0;
    for (std::size_t i = 0; i + 1 <= lo; ++i)
        total += 0.5 * (v[i] + v[i + 1]) * (r[i + 1] - r[i]);
    std::size_t i = lo;
    while (i + 2 <= hi) {
        total += href * (v[i] + 4.0 * v[i + 1] + v[i + 2]) / 3.0;
        i += 2;
    }
    for (; i + 1 < n; ++i)
        total += 0.5 * (v[i] + v[i + 1]) * (r[i + 1] - r[i]);
    return total;
}

}  // namespace oracle
