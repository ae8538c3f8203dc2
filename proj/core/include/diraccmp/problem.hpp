#pragma once

#include <optional>

#include "diraccmp/dirac1d.hpp"
#include "diraccmp/diracd.hpp"
#include "diraccmp/potentials.hpp"

namespace diraccmp {

/// A complete eigenproblem statement: vector potential, scalar coupling
/// (S = sV unless an explicit scalar is given), mass, and the spatial
/// setting (1D parity or a d > 1 channel).
struct DiracProblem {
    PotentialSpec V;
    std::optional<PotentialSpec> S;  // explicit scalar; absent means S = sV
    SymmetryMode mode;               // used when S is absent
    double mass = 1.0;
    int dimension = 1;
    std::optional<Channel> channel;  // required when dimension > 1
    ParityChoice parity;             // 1D only

    bool has_symmetry() const { return !S.has_value(); }
};

/// Solved eigenvalue plus whichever state representation applies.
struct ProblemSolution {
    double E = 0.0;
    std::optional<BoundState1D> state1d;
    std::optional<BoundStateRadial> state_radial;
};

ProblemSolution solve_problem(const DiracProblem& p, const SolverConfig& config = {});

}  // namespace diraccmp
