#pragma once

#include "diraccmp/numerics.hpp"
#include "diraccmp/potentials.hpp"
#include "diraccmp/solver_common.hpp"

namespace diraccmp {

/// Parity bookkeeping on the half-line: the two spinor components have
/// definite and opposite parities, so exactly one vanishes at x = 0.
/// 0 requests auto-selection (solve both, keep the valid lower state).
struct ParityChoice {
    int which_vanishes_at_origin = 0;  // 0 = auto, else 1 or 2
};

struct BoundState1D {
    double E = 0.0;
    SampledFunction phi1, phi2;  // on [0, X_max]
    int nodes1 = 0, nodes2 = 0;  // interior sign changes on (0, X_max)
    double norm = 0.0;           // full-line integral of phi1^2 + phi2^2
    SymmetryMode mode;
    double mass = 0.0;
    int parity = 0;              // component that vanishes at the origin
};

/// Number of strict sign changes of f, ignoring values below
/// 1e-12 * max|f|.
int node_count(const SampledFunction& f);

/// Ground state of the 1D coupled system with S = sV on the half-line.
BoundState1D solve_ground_1d(const PotentialSpec& V, SymmetryMode mode, double m,
                             ParityChoice parity = {}, const SolverConfig& config = {});

/// Schrodinger-like reduction: -phi'' + 2V(E+sm) phi = (E^2 - m^2) phi.
EffectiveProblem reduce_to_schrodinger_1d(const PotentialSpec& V, SymmetryMode mode,
                                          double m, double E_trial);

/// Checks that the designated component (phi1 for s = +1, phi2 for
/// s = -1) is monotone on [0, X_max].
MonotonicityReport check_lemma1(const BoundState1D& state, SymmetryMode mode);

}  // namespace diraccmp
