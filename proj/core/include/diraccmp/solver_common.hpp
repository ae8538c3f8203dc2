#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace diraccmp {

struct SolverConfig {
    double abs_tol = 1e-11;
    double rel_tol = 1e-10;
    double eig_tol = 1e-10;
    int scan_points = 400;       // energy-window scan resolution
    int assembly_segments = 4000;  // uniform segments of the stored wavefunction
};

/// No eigenvalue in the window, decay failure, or an unobtainable node
/// structure. Carries the attempted energy window for diagnostics.
struct SolverError : std::runtime_error {
    double window_lo, window_hi;
    SolverError(const std::string& what, double lo, double hi)
        : std::runtime_error(what), window_lo(lo), window_hi(hi) {}
};

struct MonotonicityReport {
    bool monotone = false;
    double max_violation = 0.0;  // relative to the component scale
};

/// The Schrodinger-like second-order reduction of the coupled system
/// at a trial energy: -psi'' + potential(x) psi = effective_eigenvalue psi.
/// Serves as an independent cross-check oracle for the shooting solver.
struct EffectiveProblem {
    std::function<double(double)> potential;
    double effective_eigenvalue = 0.0;  // E^2 - m^2
    int housed_component = 1;           // 1 if s = +1, 2 if s = -1
};

}  // namespace diraccmp
