#include "diraccmp/dirac1d.hpp"

#include <cmath>

#include "shooting.hpp"

namespace diraccmp {

namespace {

using detail::AssembledState;
using detail::EngineDef;
using detail::ShootingEngine;

EngineDef make_def_1d(const PotentialSpec& V, SymmetryMode mode, double m,
                      int parity) {
    EngineDef def;
    const int s = mode.s;
    def.coeffs = [V, s, m](double E, double x, double& a11, double& a12,
                           double& a21) {
        const double v = eval(V, x);
        a11 = 0.0;
        a12 = -(E + m - (1 - s) * v);
        a21 = E - m - (1 + s) * v;
    };
    def.origin_start = [parity](double) {
        return std::make_pair(0.0, parity == 2 ? std::array<double, 2>{1.0, 0.0}
                                               : std::array<double, 2>{0.0, 1.0});
    };
    def.geometry_scan_start = 0.0;
    def.char_length = length_scale(V);
    def.halfline_double_norm = true;
    return def;
}

BoundState1D to_state(const AssembledState& st, SymmetryMode mode, double m,
                      int parity) {
    BoundState1D out;
    out.E = st.E;
    out.phi1 = SampledFunction(Grid(st.grid), st.c1);
    out.phi2 = SampledFunction(Grid(st.grid), st.c2);
    out.nodes1 = st.nodes1;
    out.nodes2 = st.nodes2;
    out.norm = 1.0;
    out.mode = mode;
    out.mass = m;
    out.parity = parity;

    // canonical sign: the housed component is positive at its peak
    auto& housed = mode.q() == 1 ? out.phi1.values : out.phi2.values;
    double peak = 0.0;
    for (double v : housed)
        if (std::abs(v) > std::abs(peak)) peak = v;
    if (peak < 0) {
        for (auto& v : out.phi1.values) v = -v;
        for (auto& v : out.phi2.values) v = -v;
    }
    return out;
}

}  // namespace

int node_count(const SampledFunction& f) { return detail::count_nodes(f.values); }

BoundState1D solve_ground_1d(const PotentialSpec& V, SymmetryMode mode, double m,
                             ParityChoice parity, const SolverConfig& config) {
    if (m <= 0) throw std::invalid_argument("solve_ground_1d: mass must be > 0");
    if (V.singular_at_origin())
        throw std::invalid_argument(
            "solve_ground_1d: potential is singular at the origin");
    const PotentialClass cls = classify(V, mode);
    if (cls == PotentialClass::unclassified)
        throw std::invalid_argument("solve_ground_1d: unclassified potential");
    const EnergyWindow win = energy_window(cls, mode, m);
    const int direction = std::isfinite(win.lo) ? +1 : -1;
    const int q = mode.q();

    std::vector<int> parities;
    if (parity.which_vanishes_at_origin == 0)
        parities = {1, 2};
    else if (parity.which_vanishes_at_origin == 1 ||
             parity.which_vanishes_at_origin == 2)
        parities = {parity.which_vanishes_at_origin};
    else
        throw std::invalid_argument("solve_ground_1d: parity must be 0, 1 or 2");

    std::optional<BoundState1D> best;
    for (int p : parities) {
        ShootingEngine eng(make_def_1d(V, mode, m, p), config);
        auto st = eng.solve(win.lo, win.hi, direction, [&](const AssembledState& a) {
            return (q == 1 ? a.nodes1 : a.nodes2) == 0;
        });
        if (!st) continue;
        auto cand = to_state(*st, mode, m, p);
        // the bottom of the spectrum sits nearest the finite window edge
        if (!best || (direction > 0 ? cand.E < best->E : cand.E > best->E))
            best = std::move(cand);
    }
    if (!best)
        throw SolverError("solve_ground_1d: no node-free eigenstate in the window",
                          win.lo, win.hi);
    return *best;
}

EffectiveProblem reduce_to_schrodinger_1d(const PotentialSpec& V, SymmetryMode mode,
                                          double m, double E_trial) {
    EffectiveProblem ep;
    const int s = mode.s;
    ep.potential = [V, s, m, E_trial](double x) {
        return 2.0 * eval(V, x) * (E_trial + s * m);
    };
    ep.effective_eigenvalue = E_trial * E_trial - m * m;
    ep.housed_component = mode.q();
    return ep;
}

MonotonicityReport check_lemma1(const BoundState1D& state, SymmetryMode mode) {
    const auto& f = mode.q() == 1 ? state.phi1.values : state.phi2.values;
    return detail::monotonicity(f);
}

}  // namespace diraccmp
