#include "diraccmp/diracd.hpp"

#include <cmath>

#include "shooting.hpp"

namespace diraccmp {

namespace {

using detail::AssembledState;
using detail::EngineDef;
using detail::ShootingEngine;

// Origin data for the coupled radial system with V ~ Vw/r + V0 and
// S ~ Sw/r + S0: a two-term series r^gamma (a0 + a1 r, b0 + b1 r) with
// gamma = sqrt(k^2 + (Sw-Vw)(Sw+Vw)). The overall r^gamma factor is
// dropped (the start vector is normalized anyway).
EngineDef make_def_radial(const PotentialSpec& V,
                          const std::optional<PotentialSpec>& S, int s, double m,
                          const Channel& channel, const SolverConfig&) {
    const double k = channel.kd();
    const OriginBehavior oV = origin_behavior(V);
    const OriginBehavior oS =
        S ? origin_behavior(*S)
          : OriginBehavior{s * oV.inverse_r_coeff, s * oV.constant_term};
    const double Vw = oV.inverse_r_coeff, V0 = oV.constant_term;
    const double Sw = oS.inverse_r_coeff, S0 = oS.constant_term;
    const double d1 = Sw - Vw, d2 = Sw + Vw;
    const double g2 = k * k + d1 * d2;
    if (g2 <= 0)
        throw std::invalid_argument(
            "solve_ground_radial: origin too singular (k^2 + (Sw-Vw)(Sw+Vw) <= 0)");
    const double gamma = std::sqrt(g2);
    const std::array<double, 2> v1{d1, gamma + k}, v2{gamma - k, d2};
    const auto lead =
        std::hypot(v1[0], v1[1]) >= std::hypot(v2[0], v2[1]) ? v1 : v2;
    const double a0 = lead[0], b0 = lead[1];

    double ls = length_scale(V);
    if (S) ls = std::min(ls, length_scale(*S));
    const double r0 = 1e-6 * std::min(1.0, ls);

    EngineDef def;
    def.coeffs = [V, S, s, m, k](double E, double r, double& a11, double& a12,
                                 double& a21) {
        const double v = eval(V, r);
        const double sc = S ? eval(*S, r) : s * v;
        a11 = -k / r;
        a12 = m + E + sc - v;
        a21 = m - E + sc + v;
    };
    def.origin_start = [=](double E) {
        const double c1 = m + E + S0 - V0;
        const double c2 = m - E + S0 + V0;
        const double det = 2 * gamma + 1;
        const double a1 = ((gamma + 1 - k) * c1 * b0 + d1 * c2 * a0) / det;
        const double b1 = (d2 * c1 * b0 + (gamma + 1 + k) * c2 * a0) / det;
        return std::make_pair(
            r0, std::array<double, 2>{a0 + a1 * r0, b0 + b1 * r0});
    };
    def.geometry_scan_start = r0;
    def.char_length = ls;
    return def;
}

BoundStateRadial to_state(const AssembledState& st, const Channel& channel,
                          double m, std::optional<int> s) {
    BoundStateRadial out;
    out.E = st.E;
    out.psi1 = SampledFunction(Grid(st.grid), st.c1);
    out.psi2 = SampledFunction(Grid(st.grid), st.c2);
    out.nodes1 = st.nodes1;
    out.nodes2 = st.nodes2;
    out.norm = 1.0;
    out.channel = channel;
    out.mass = m;
    out.s = s;

    // canonical sign: the dominant component is positive at its peak
    double p1 = 0.0, p2 = 0.0;
    for (double v : out.psi1.values)
        if (std::abs(v) > std::abs(p1)) p1 = v;
    for (double v : out.psi2.values)
        if (std::abs(v) > std::abs(p2)) p2 = v;
    const double peak = std::abs(p1) >= std::abs(p2) ? p1 : p2;
    if (peak < 0) {
        for (auto& v : out.psi1.values) v = -v;
        for (auto& v : out.psi2.values) v = -v;
    }
    return out;
}

}  // namespace

Channel::Channel(int d_, double j_, int tau_) : d(d_), j(j_), tau(tau_) {
    if (d < 2) throw std::invalid_argument("Channel: d must be >= 2");
    if (tau != 1 && tau != -1) throw std::invalid_argument("Channel: tau must be +-1");
    if (j <= 0 || std::abs(2 * j - std::round(2 * j)) > 1e-12)
        throw std::invalid_argument("Channel: j must be a positive half-integer");
}

double kd(const Channel& channel) { return channel.kd(); }

double CoulombExact::psi(double r) const {
    return std::sqrt(r) * std::exp(-r * std::sqrt(1.0 - E * E));
}

CoulombExact coulomb_exact_d2(double beta) {
    if (!(beta > 0.0) || !(beta <= 0.5))
        throw std::invalid_argument("coulomb_exact_d2: beta out of range (0, 1/2]");
    CoulombExact out;
    out.beta = beta;
    const double b2 = 4.0 * beta * beta;
    out.E = (1.0 - b2) / (1.0 + b2);
    return out;
}

BoundStateRadial solve_ground_radial(const PotentialSpec& V, SymmetryMode mode,
                                     double m, const Channel& channel,
                                     const SolverConfig& config) {
    if (m <= 0) throw std::invalid_argument("solve_ground_radial: mass must be > 0");
    const PotentialClass cls = classify(V, mode);
    if (cls == PotentialClass::unclassified)
        throw std::invalid_argument("solve_ground_radial: unclassified potential");
    const EnergyWindow win = energy_window(cls, mode, m);
    const int direction = std::isfinite(win.lo) ? +1 : -1;
    const double skd = mode.s * channel.kd();

    ShootingEngine eng(make_def_radial(V, std::nullopt, mode.s, m, channel, config),
                       config);
    // s k_d < 0: the subspace bottom is nodeless in both components.
    // s k_d > 0: a node is unavoidable; keep the first state found.
    auto st = eng.solve(win.lo, win.hi, direction, [&](const AssembledState& a) {
        return skd >= 0 || (a.nodes1 == 0 && a.nodes2 == 0);
    });
    if (!st)
        throw SolverError("solve_ground_radial: no eigenstate in the window",
                          win.lo, win.hi);
    return to_state(*st, channel, m, mode.s);
}

BoundStateRadial solve_ground_radial(const PotentialSpec& V, const PotentialSpec& S,
                                     double m, const Channel& channel,
                                     const SolverConfig& config) {
    if (m <= 0) throw std::invalid_argument("solve_ground_radial: mass must be > 0");
    if (limit_at_infinity(V) != 0.0 || limit_at_infinity(S) != 0.0)
        throw std::invalid_argument(
            "solve_ground_radial: explicit-scalar solve requires vanishing tails");
    ShootingEngine eng(make_def_radial(V, S, 0, m, channel, config), config);
    // With a general scalar term the window edges can host extra noded
    // branches; the ground state is the lowest both-nodeless root.
    auto st = eng.solve(-m, m, +1, [](const AssembledState& a) {
        return a.nodes1 == 0 && a.nodes2 == 0;
    });
    if (!st)
        throw SolverError("solve_ground_radial: no node-free eigenstate in (-m, m)",
                          -m, m);
    return to_state(*st, channel, m, std::nullopt);
}

EffectiveProblem reduce_to_schrodinger_radial(const PotentialSpec& V,
                                              SymmetryMode mode, double m,
                                              const Channel& channel,
                                              double E_trial) {
    EffectiveProblem ep;
    const int s = mode.s;
    const double k = channel.kd();
    ep.potential = [V, s, m, k, E_trial](double r) {
        return k * (k + s) / (r * r) + 2.0 * (E_trial + s * m) * eval(V, r);
    };
    ep.effective_eigenvalue = E_trial * E_trial - m * m;
    ep.housed_component = mode.q();
    return ep;
}

MonotonicityReport check_lemma2(const BoundStateRadial& state, SymmetryMode mode) {
    const auto& comp = mode.q() == 1 ? state.psi1 : state.psi2;
    const double ex = mode.s > 0 ? state.channel.kd() : -state.channel.kd();
    std::vector<double> w(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
        w[i] = comp.values[i] * std::pow(comp.grid.points[i], ex);
    return detail::monotonicity(w);
}

NodeReport node_structure(const BoundStateRadial& state, SymmetryMode mode) {
    NodeReport rep;
    rep.nodes1 = state.nodes1;
    rep.nodes2 = state.nodes2;
    const double skd = mode.s * state.channel.kd();
    rep.skd_sign = skd > 0 ? 1 : (skd < 0 ? -1 : 0);
    rep.nodeless_expected = skd < 0;
    rep.consistent = rep.nodeless_expected
                         ? (state.nodes1 == 0 && state.nodes2 == 0)
                         : (state.nodes1 + state.nodes2 > 0);
    return rep;
}

}  // namespace diraccmp
