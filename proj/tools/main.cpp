// Command-line front end: solve | compare | transform | reproduce | scan.
// Exit codes: 0 success/consistent, 1 usage or config error, 2 solver
// failure, 3 comparison falsification.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "diraccmp/io.hpp"
#include "diraccmp/registry.hpp"
#include "diraccmp/theorems.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace diraccmp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitFalsified = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ParsedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    auto cfg = parse_config_text(ss.str());
    apply_env_overrides(cfg.numerics);
    return cfg;
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write output file: " + out_path);
    out << doc.dump(2) << "\n";
}

void write_csv_file(const std::string& path,
                    const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write file: " + path);
    writer(out);
}

json solution_to_json(const ProblemSolution& sol, const DiracProblem& p) {
    json j;
    j["E"] = sol.E;
    if (sol.state1d) {
        const auto& st = *sol.state1d;
        j["nodes1"] = st.nodes1;
        j["nodes2"] = st.nodes2;
        j["norm"] = st.norm;
        j["parity"] = st.parity;
        j["x_max"] = st.phi1.grid.back();
        const auto mono = check_lemma1(st, st.mode);
        j["designated_component_monotone"] = mono.monotone;
    } else {
        const auto& st = *sol.state_radial;
        j["nodes1"] = st.nodes1;
        j["nodes2"] = st.nodes2;
        j["norm"] = st.norm;
        j["k_d"] = st.channel.kd();
        j["r_max"] = st.psi1.grid.back();
        if (st.s) {
            const auto rep = node_structure(st, SymmetryMode(*st.s));
            j["nodeless_expected"] = rep.nodeless_expected;
            j["node_structure_consistent"] = rep.consistent;
            j["designated_weighted_component_monotone"] =
                check_lemma2(st, SymmetryMode(*st.s)).monotone;
        }
    }
    if (p.has_symmetry()) j["symmetry"] = p.mode.s;
    return j;
}

Strategy strategy_from_name(const std::string& name) {
    for (Strategy s : {Strategy::auto_select, Strategy::basic, Strategy::t1,
                       Strategy::t2, Strategy::t3, Strategy::t4, Strategy::t5,
                       Strategy::c1, Strategy::c2, Strategy::c4, Strategy::c5})
        if (strategy_name(s) == name) return s;
    throw UsageError("unknown strategy: " + name);
}

std::string ordering_name(Ordering o) {
    switch (o) {
        case Ordering::a_leq_b: return "Ea<=Eb";
        case Ordering::a_gt_b: return "Ea>Eb";
        case Ordering::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

json report_to_json(const ComparisonReport& rep) {
    json j;
    j["strategy"] = strategy_name(rep.applied);
    j["hypothesis_satisfied"] = rep.hypothesis_satisfied;
    j["predicted"] = ordering_name(rep.predicted);
    j["E_a"] = rep.Ea;
    j["E_b"] = rep.Eb;
    j["consistent"] = rep.consistent;
    if (rep.transform) {
        j["transform"] = {{"which", transform_name(rep.transform->which)},
                          {"min_value", rep.transform->min_value},
                          {"final_value", rep.transform->final_value},
                          {"nonnegative", rep.transform->nonnegative},
                          {"tail_bound", rep.transform->tail_bound},
                          {"tail_bounded", rep.transform->tail_bounded},
                          {"weight", rep.transform->weight}};
    }
    if (rep.crossings) {
        j["crossings"] = rep.crossings->points;
        j["ordered_first_interval"] = rep.crossings->ordered_first_interval;
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

int cmd_solve(const std::string& config_path, const std::string& out_path,
              const std::string& csv_path, bool dump_config) {
    const auto cfg = load_config(config_path);
    if (dump_config) {
        std::cout << config_to_text(cfg.problem, cfg.numerics);
        return kExitOk;
    }
    const auto sol = solve_problem(cfg.problem, cfg.numerics);
    if (!csv_path.empty()) {
        write_csv_file(csv_path, [&](std::ostream& os) {
            if (sol.state1d)
                write_wavefunction_csv(os, sol.state1d->phi1, sol.state1d->phi2);
            else
                write_wavefunction_csv(os, sol.state_radial->psi1,
                                       sol.state_radial->psi2);
        });
    }
    emit(solution_to_json(sol, cfg.problem), out_path);
    return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& strategy, const std::string& out_path) {
    const auto a = load_config(path_a);
    const auto b = load_config(path_b);
    const auto rep =
        compare(a.problem, b.problem, strategy_from_name(strategy), a.numerics);
    emit(report_to_json(rep), out_path);
    return rep.consistent ? kExitOk : kExitFalsified;
}

int cmd_transform(const std::string& path_a, const std::string& path_b,
                  const std::string& which, double x_max,
                  const std::string& curve_path, const std::string& out_path) {
    const auto a = load_config(path_a);
    const auto b = load_config(path_b);
    QuadratureConfig qcfg;
    qcfg.abs_tol = a.numerics.abs_tol;
    qcfg.rel_tol = a.numerics.rel_tol;

    const bool needs_weight = which == "p" || which == "mu";
    std::optional<ProblemSolution> sol;
    if (needs_weight || x_max <= 0) sol = solve_problem(a.problem, a.numerics);
    if (x_max <= 0)
        x_max = sol->state1d ? sol->state1d->phi1.grid.back()
                             : sol->state_radial->psi1.grid.back();

    TransformCurve curve;
    if (which == "g") {
        curve = transform_g(a.problem.V, b.problem.V, x_max, qcfg);
    } else if (which == "rho") {
        if (!a.problem.channel) throw UsageError("rho transform needs dimension > 1");
        curve = transform_rho(a.problem.V, b.problem.V, a.problem.mode,
                              *a.problem.channel, x_max, qcfg);
    } else if (which == "p") {
        const auto& st = *sol->state1d;
        SampledFunction w = a.problem.mode.q() == 1 ? st.phi1 : st.phi2;
        curve = transform_p(a.problem.V, b.problem.V,
                            [w](double t) { return w(t); }, a.problem.mode, x_max,
                            qcfg);
    } else if (which == "mu") {
        if (!a.problem.channel) throw UsageError("mu transform needs dimension > 1");
        const auto& st = *sol->state_radial;
        SampledFunction w = a.problem.mode.q() == 1 ? st.psi1 : st.psi2;
        // the state vanishes at the origin; do not clamp below the grid
        const double lo = w.grid.front();
        curve = transform_mu(a.problem.V, b.problem.V,
                             [w, lo](double t) { return t < lo ? 0.0 : w(t); },
                             a.problem.mode, *a.problem.channel, x_max, qcfg);
    } else {
        throw UsageError("unknown transform: " + which);
    }

    if (!curve_path.empty())
        write_csv_file(curve_path,
                       [&](std::ostream& os) { write_curve_csv(os, curve.curve); });
    json j = {{"which", transform_name(curve.which)},
              {"min_value", curve.min_value},
              {"final_value", curve.final_value},
              {"nonnegative", curve.nonnegative},
              {"tail_bound", curve.tail_bound},
              {"tail_bounded", curve.tail_bounded},
              {"weight", curve.weight},
              {"x_max", x_max}};
    emit(j, out_path);
    return kExitOk;
}

int cmd_reproduce(const std::string& id) {
    std::vector<std::string> ids;
    if (id == "all")
        ids = registry_ids();
    else
        ids = {id};
    SolverConfig cfg;
    apply_env_overrides(cfg);
    bool all_ok = true;
    for (const auto& rid : ids) {
        const auto rec = run_record(rid, cfg);
        for (const auto& c : rec.checks) {
            const char* tag = c.status == CheckResult::Status::pass   ? "PASS"
                              : c.status == CheckResult::Status::info ? "INFO"
                                                                      : "FAIL";
            std::cout << rec.id << "  " << c.name << "  " << tag
                      << "  expected=" << c.expected << "  measured=" << c.measured
                      << "  tol=" << c.tolerance;
            if (!c.note.empty()) std::cout << "  (" << c.note << ")";
            std::cout << "\n";
        }
        all_ok = all_ok && rec.passed();
    }
    return all_ok ? kExitOk : kExitSolver;
}

int cmd_scan(const std::string& config_path, const std::string& param,
             double from, double to, int steps, const std::string& out_path) {
    if (steps < 1) throw UsageError("scan: steps must be >= 1");
    const auto cfg = load_config(config_path);
    const auto names = cfg.problem.V.param_names();
    int slot = -1;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == param) slot = static_cast<int>(i);
    if (slot < 0)
        throw UsageError("scan: potential kind '" + cfg.problem.V.kind_name() +
                         "' has no parameter '" + param + "'");

    std::ostringstream csv;
    csv << param << ",E\n" << std::setprecision(17);
    for (int i = 0; i <= steps; ++i) {
        const double v = from + (to - from) * i / steps;
        DiracProblem p = cfg.problem;
        if (slot == 0) p.V.p1 = v;
        if (slot == 1) p.V.p2 = v;
        if (slot == 2) p.V.p3 = v;
        csv << v << ',';
        try {
            csv << solve_problem(p, cfg.numerics).E;
        } catch (const SolverError&) {
            csv << "nan";
        }
        csv << '\n';
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        write_csv_file(out_path, [&](std::ostream& os) { os << csv.str(); });
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac bound states and comparison-theorem verdicts"};
    app.require_subcommand(1);

    std::string config, config_a, config_b, out_path, csv_path;
    std::string strategy = "auto", which = "g", record_id = "all", param;
    double x_max = 0.0, from = 0.0, to = 1.0;
    int steps = 10;
    bool dump = false;

    auto* solve = app.add_subcommand("solve", "solve one eigenproblem");
    solve->add_option("--config", config, "problem config (JSON)")->required();
    solve->add_option("--output", out_path, "JSON summary file (default stdout)");
    solve->add_option("--wavefunction", csv_path, "wavefunction CSV file");
    solve->add_flag("--dump-config", dump, "print the canonical config and exit");

    auto* cmp = app.add_subcommand("compare", "compare two problems");
    cmp->add_option("--config-a", config_a, "problem a config")->required();
    cmp->add_option("--config-b", config_b, "problem b config")->required();
    cmp->add_option("--strategy", strategy,
                    "auto|basic|T1|T2|T3|T4|T5|C1|C2|C4|C5");
    cmp->add_option("--output", out_path, "JSON report file (default stdout)");

    auto* tf = app.add_subcommand("transform", "evaluate a comparison transform");
    tf->add_option("--config-a", config_a, "problem a config")->required();
    tf->add_option("--config-b", config_b, "problem b config")->required();
    tf->add_option("--which", which, "g|p|rho|mu")->required();
    tf->add_option("--x-max", x_max, "domain end (default: solver domain)");
    tf->add_option("--curve", csv_path, "curve CSV file");
    tf->add_option("--output", out_path, "JSON verdict file (default stdout)");

    auto* rep = app.add_subcommand("reproduce", "run reference reproductions");
    rep->add_option("id", record_id, "registry id or 'all'");

    auto* scan = app.add_subcommand("scan", "parameter sweep, E vs parameter CSV");
    scan->add_option("--config", config, "base problem config")->required();
    scan->add_option("--param", param, "potential parameter name")->required();
    scan->add_option("--from", from, "start value")->required();
    scan->add_option("--to", to, "end value")->required();
    scan->add_option("--steps", steps, "number of steps");
    scan->add_option("--output", out_path, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return cmd_solve(config, out_path, csv_path, dump);
        if (cmp->parsed()) return cmd_compare(config_a, config_b, strategy, out_path);
        if (tf->parsed())
            return cmd_transform(config_a, config_b, which, x_max, csv_path,
                                 out_path);
        if (rep->parsed()) return cmd_reproduce(record_id);
        if (scan->parsed())
            return cmd_scan(config, param, from, to, steps, out_path);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << " (energy window ["
                  << e.window_lo << ", " << e.window_hi << "])\n";
        return kExitSolver;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitUsage;
}
