#include "diraccmp/registry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "diraccmp/theorems.hpp"

namespace diraccmp {

namespace {

CheckResult num_check(std::string name, double expected, double measured,
                      double tol, std::string note = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = expected;
    c.measured = measured;
    c.tolerance = tol;
    c.status = std::abs(measured - expected) <= tol ? CheckResult::Status::pass
                                                    : CheckResult::Status::fail;
    c.note = std::move(note);
    return c;
}

CheckResult flag_check(std::string name, bool ok, std::string note = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = 1.0;
    c.measured = ok ? 1.0 : 0.0;
    c.tolerance = 0.5;
    c.status = ok ? CheckResult::Status::pass : CheckResult::Status::fail;
    c.note = std::move(note);
    return c;
}

CheckResult info_check(std::string name, double expected, double measured,
                       std::string note) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = expected;
    c.measured = measured;
    c.tolerance = 0.0;
    c.status = CheckResult::Status::info;
    c.note = std::move(note);
    return c;
}

RecordResult run_1d_harmonic_sine(const SolverConfig& cfg) {
    RecordResult rec{"1d-harmonic-sine", {}};
    const auto Va = PotentialSpec::harmonic(0.5);
    const auto Vb = PotentialSpec::sine_modulated_harmonic(0.5, 1.64);
    const SymmetryMode mode(+1);
    const double m = 1.2;
    const auto a = solve_ground_1d(Va, mode, m, {}, cfg);
    const auto b = solve_ground_1d(Vb, mode, m, {}, cfg);
    rec.checks.push_back(num_check("E_a", 1.77935, a.E, 1e-4));
    rec.checks.push_back(num_check("E_b", 1.85470, b.E, 1e-4));
    const double X = std::max(a.phi1.grid.back(), b.phi1.grid.back());
    const auto g = transform_g(Va, Vb, X);
    rec.checks.push_back(flag_check("g_nonnegative", g.nonnegative));
    rec.checks.push_back(flag_check("ordering", a.E <= b.E + 1e-8));
    return rec;
}

RecordResult run_sine_lobe_areas(const SolverConfig&) {
    RecordResult rec{"sine-lobe-areas", {}};
    const double beta = 1.64;
    auto f = [](double z) { return std::sin(z) / z; };
    std::vector<double> zeros{beta};
    for (int k = 1; k <= 21; ++k) zeros.push_back(k * std::numbers::pi);
    const auto osc = quad_oscillatory(f, zeros);
    rec.checks.push_back(num_check("lobe1", 0.43810, osc.lobes[0], 1e-5));
    rec.checks.push_back(num_check("lobe2", 0.43379, osc.lobes[1], 1e-5));
    bool decreasing = true;
    for (int i = 0; i + 1 < 20; ++i)
        if (osc.lobes[i + 1] >= osc.lobes[i]) decreasing = false;
    rec.checks.push_back(flag_check("first_20_lobes_strictly_decreasing", decreasing));
    return rec;
}

RecordResult run_d5_softcore_sech2(const SolverConfig& cfg) {
    RecordResult rec{"d5-softcore-sech2", {}};
    const Channel ch(5, 0.5, -1);
    const auto S = PotentialSpec::coulomb(0.7);
    const auto a =
        solve_ground_radial(PotentialSpec::softcore(0.8, 1.6, 3), S, 1.0, ch, cfg);
    const auto b =
        solve_ground_radial(PotentialSpec::sech_squared(0.5, 0.31), S, 1.0, ch, cfg);
    rec.checks.push_back(num_check("E_a", 0.77260, a.E, 1e-4));
    rec.checks.push_back(num_check("E_b", 0.81648, b.E, 1e-4));
    rec.checks.push_back(flag_check("ordering", a.E <= b.E + 1e-8));
    return rec;
}

RecordResult run_fig2_left(const SolverConfig& cfg) {
    RecordResult rec{"fig2-left", {}};
    const Channel ch(4, 0.5, +1);
    const auto st = solve_ground_radial(PotentialSpec::cutoff_coulomb(1.5, 0.01),
                                        SymmetryMode(+1), 1.0, ch, cfg);
    rec.checks.push_back(num_check("E", 0.47399, st.E, 1e-4));
    rec.checks.push_back(flag_check("node_present", st.nodes1 + st.nodes2 >= 1,
                                    "s k_d > 0: a node is unavoidable"));
    return rec;
}

RecordResult run_fig2_right(const SolverConfig& cfg) {
    RecordResult rec{"fig2-right", {}};
    const Channel ch(7, 2.5, -1);
    const auto st = solve_ground_radial(PotentialSpec::cutoff_coulomb(2.5, 1.2),
                                        SymmetryMode(+1), 1.0, ch, cfg);
    rec.checks.push_back(num_check("E", 0.69329, st.E, 1e-4));
    rec.checks.push_back(
        flag_check("both_nodeless", st.nodes1 == 0 && st.nodes2 == 0));
    return rec;
}

RecordResult run_yukawa_coulomb_c5(const SolverConfig& cfg) {
    RecordResult rec{"yukawa-coulomb-c5", {}};
    const Channel ch(2, 0.5, -1);
    const auto Va = PotentialSpec::yukawa(0.2, 0.1);
    const auto Vb = PotentialSpec::coulomb(0.172);
    const auto a = solve_ground_radial(Va, SymmetryMode(+1), 1.0, ch, cfg);
    const auto exact = coulomb_exact_d2(0.172);
    rec.checks.push_back(num_check("E_a", 0.75632, a.E, 1e-4));
    rec.checks.push_back(num_check("E_b", 0.78837, exact.E, 1e-5));

    const auto cr = detect_crossings(Va, Vb, 0.0, 50.0);
    rec.checks.push_back(num_check("crossings", 1.0, double(cr.count()), 0.5));

    // mu(inf) with the exact reference wavefunction as the weight
    auto d = difference(Va, Vb);
    const double mu_inf = quad_adaptive(
        [&](double r) { return d(r) * exact.psi(r) * std::sqrt(r); }, 1e-300,
        std::numeric_limits<double>::infinity());
    rec.checks.push_back(num_check("mu_infinity", 0.00006, mu_inf, 2e-5));
    rec.checks.push_back(flag_check("mu_nonnegative", mu_inf >= -1e-12));
    rec.checks.push_back(flag_check("ordering", a.E <= exact.E + 1e-8));
    return rec;
}

RecordResult run_yukawa_coulomb_lowerbound(const SolverConfig& cfg) {
    RecordResult rec{"yukawa-coulomb-lowerbound", {}};
    const Channel ch(2, 0.5, -1);
    const auto Va = PotentialSpec::yukawa(0.2, 0.1);
    const auto Vb = PotentialSpec::coulomb(0.201);
    auto d = difference(Va, Vb);
    bool a_above = true;  // V_a > V_b pointwise
    for (int i = 1; i <= 4096; ++i)
        if (d(200.0 * i / 4096.0) >= 0) a_above = false;
    rec.checks.push_back(flag_check("pointwise_a_above_b", a_above));

    const auto a = solve_ground_radial(Va, SymmetryMode(+1), 1.0, ch, cfg);
    const auto b = solve_ground_radial(Vb, SymmetryMode(+1), 1.0, ch, cfg);
    rec.checks.push_back(num_check("E_a", 0.75632, a.E, 1e-4));
    rec.checks.push_back(flag_check("ordering", a.E >= b.E - 1e-8));
    const double closed = coulomb_exact_d2(0.201).E;
    rec.checks.push_back(num_check("E_b_solver_vs_closed_form", closed, b.E, 1e-6));
    rec.checks.push_back(info_check(
        "E_b_printed_reference", 0.70010, b.E,
        "printed reference disagrees with the closed form (0.72176); solver "
        "arbitrates, recorded as INFO"));
    return rec;
}

RecordResult run_coulomb_exact_closedform(const SolverConfig& cfg) {
    RecordResult rec{"coulomb-exact-closedform", {}};
    const auto exact = coulomb_exact_d2(0.172);
    const double resid =
        exact.E * exact.E - 1.0 +
        std::pow(2.0 * exact.beta * (exact.E + 1.0), 2);
    rec.checks.push_back(num_check("quadratic_residual", 0.0, resid, 1e-12));
    rec.checks.push_back(num_check("E_closed_form", 0.78837, exact.E, 1e-5));
    const Channel ch(2, 0.5, -1);
    const auto st = solve_ground_radial(PotentialSpec::coulomb(0.172),
                                        SymmetryMode(+1), 1.0, ch, cfg);
    rec.checks.push_back(num_check("E_solver_vs_closed_form", exact.E, st.E, 1e-6));
    return rec;
}

}  // namespace

bool RecordResult::passed() const {
    for (const auto& c : checks)
        if (c.status == CheckResult::Status::fail) return false;
    return true;
}

std::vector<std::string> registry_ids() {
    return {"1d-harmonic-sine",        "d5-softcore-sech2",
            "fig2-left",               "fig2-right",
            "yukawa-coulomb-c5",       "yukawa-coulomb-lowerbound",
            "coulomb-exact-closedform", "sine-lobe-areas"};
}

RecordResult run_record(const std::string& id, const SolverConfig& config) {
    if (id == "1d-harmonic-sine") return run_1d_harmonic_sine(config);
    if (id == "d5-softcore-sech2") return run_d5_softcore_sech2(config);
    if (id == "fig2-left") return run_fig2_left(config);
    if (id == "fig2-right") return run_fig2_right(config);
    if (id == "yukawa-coulomb-c5") return run_yukawa_coulomb_c5(config);
    if (id == "yukawa-coulomb-lowerbound") return run_yukawa_coulomb_lowerbound(config);
    if (id == "coulomb-exact-closedform") return run_coulomb_exact_closedform(config);
    if (id == "sine-lobe-areas") return run_sine_lobe_areas(config);
    throw std::invalid_argument("run_record: unknown id: " + id);
}

}  // namespace diraccmp
