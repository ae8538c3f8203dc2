#pragma once

#include <ostream>
#include <string>

#include "diraccmp/problem.hpp"

namespace diraccmp {

/// Parses a JSON problem config. Schema (see docs/config.md):
///   { "problem": { "mass": 1.2, "dimension": 1, "symmetry": 1,
///                  "potential": {"kind": "harmonic", "params": {"a": 0.5}},
///                  "scalar":    {...optional explicit S...},
///                  "j": 0.5, "tau": -1,        // dimension > 1
///                  "parity": "auto" },         // dimension == 1
///     "numerics": { "abs_tol": ..., "rel_tol": ..., "eig_tol": ...,
///                   "scan_points": ... } }     // all optional
/// Throws ConfigError with a descriptive message on schema violations.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedConfig {
    DiracProblem problem;
    SolverConfig numerics;
};

ParsedConfig parse_config_text(const std::string& json_text);

/// Canonical serialization; re-parses to an identical problem spec.
std::string config_to_text(const DiracProblem& problem, const SolverConfig& numerics);

/// Applies DIRACCMP_ABS_TOL / DIRACCMP_REL_TOL / DIRACCMP_EIG_TOL /
/// DIRACCMP_SCAN_POINTS environment overrides.
void apply_env_overrides(SolverConfig& config);

/// Headered CSV: r,psi1,psi2.
void write_wavefunction_csv(std::ostream& os, const SampledFunction& c1,
                            const SampledFunction& c2);

/// Headered CSV: x,value.
void write_curve_csv(std::ostream& os, const SampledFunction& curve);

}  // namespace diraccmp
