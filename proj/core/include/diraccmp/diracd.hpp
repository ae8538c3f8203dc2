#pragma once

#include <optional>

#include "diraccmp/numerics.hpp"
#include "diraccmp/potentials.hpp"
#include "diraccmp/solver_common.hpp"

namespace diraccmp {

/// Angular channel in d > 1 dimensions: k_d = tau (j + (d-2)/2).
struct Channel {
    int d = 2;
    double j = 0.5;   // positive half-integer
    int tau = +1;     // +-1

    Channel() = default;
    Channel(int d_, double j_, int tau_);
    double kd() const { return tau * (j + (d - 2) / 2.0); }
    bool operator==(const Channel& o) const {
        return d == o.d && j == o.j && tau == o.tau;
    }
};

double kd(const Channel& channel);

struct BoundStateRadial {
    double E = 0.0;
    SampledFunction psi1, psi2;  // on (0, R_max]
    int nodes1 = 0, nodes2 = 0;
    double norm = 0.0;           // integral of psi1^2 + psi2^2 over (0, inf)
    Channel channel;
    double mass = 0.0;
    std::optional<int> s;        // set when S = sV
};

/// Exact d = 2, j = 1/2, tau = -1 Coulomb reference (spin-symmetric,
/// m = 1): E solves E^2 - 1 = -(2 beta (E+1))^2.
struct CoulombExact {
    double beta = 0.0;
    double E = 0.0;
    /// Reduced-component wavefunction sqrt(r) exp(-r sqrt(1 - E^2))
    /// (not normalized).
    double psi(double r) const;
};

CoulombExact coulomb_exact_d2(double beta);

/// Bottom of the angular momentum subspace for S = sV. For sk_d < 0 the
/// returned state is nodeless in both components; for sk_d > 0 the
/// lowest state carries the unavoidable node and is returned as-is.
BoundStateRadial solve_ground_radial(const PotentialSpec& V, SymmetryMode mode,
                                     double m, const Channel& channel,
                                     const SolverConfig& config = {});

/// General scalar potential S (the S_a = S_b comparison setting).
/// Selects the lowest state with both components nodeless.
BoundStateRadial solve_ground_radial(const PotentialSpec& V, const PotentialSpec& S,
                                     double m, const Channel& channel,
                                     const SolverConfig& config = {});

/// Reduction -psi'' + (k_d(k_d+s)/r^2 + 2(E+sm)V) psi = (E^2-m^2) psi.
/// Defined only for S = sV.
EffectiveProblem reduce_to_schrodinger_radial(const PotentialSpec& V, SymmetryMode mode,
                                              double m, const Channel& channel,
                                              double E_trial);

/// Checks monotonicity of psi1 r^{k_d} (s = +1) or psi2 r^{-k_d} (s = -1).
MonotonicityReport check_lemma2(const BoundStateRadial& state, SymmetryMode mode);

struct NodeReport {
    int nodes1 = 0, nodes2 = 0;
    int skd_sign = 0;
    bool nodeless_expected = false;  // s k_d < 0
    bool consistent = false;         // expectation matches the counts
};

NodeReport node_structure(const BoundStateRadial& state, SymmetryMode mode);

}  // namespace diraccmp
