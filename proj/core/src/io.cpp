#include "diraccmp/io.hpp"

#include <cstdlib>
#include <iomanip>

#include "json.hpp"

namespace diraccmp {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key,
                      const std::string& where) {
    if (!j.contains(key))
        throw ConfigError(where + ": missing required key '" + key + "'");
    if (!j.at(key).is_number())
        throw ConfigError(where + ": '" + key + "' must be a number");
    return j.at(key).get<double>();
}

PotentialClass tail_from_name(const std::string& name, const std::string& where) {
    if (name == "class1") return PotentialClass::class1;
    if (name == "class2") return PotentialClass::class2;
    if (name == "class3") return PotentialClass::class3;
    throw ConfigError(where + ": unknown tail class '" + name + "'");
}

std::string tail_name(PotentialClass c) {
    switch (c) {
        case PotentialClass::class1: return "class1";
        case PotentialClass::class2: return "class2";
        case PotentialClass::class3: return "class3";
        case PotentialClass::unclassified: return "unclassified";
    }
    return "unclassified";
}

PotentialSpec parse_potential(const json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError(where + ": missing string key 'kind'");
    PotentialKind kind;
    try {
        kind = kind_from_name(j.at("kind").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    const json params = j.value("params", json::object());
    auto p = [&](const char* name) {
        return require_number(params, name, where + ".params");
    };
    try {
        switch (kind) {
            case PotentialKind::zero:
                return PotentialSpec::zero_potential();
            case PotentialKind::harmonic:
                return PotentialSpec::harmonic(p("a"));
            case PotentialKind::sine_modulated_harmonic:
                return PotentialSpec::sine_modulated_harmonic(p("b"), p("beta"));
            case PotentialKind::coulomb:
                return PotentialSpec::coulomb(p("beta"));
            case PotentialKind::cutoff_coulomb:
                return PotentialSpec::cutoff_coulomb(p("v"), p("a"));
            case PotentialKind::yukawa:
                return PotentialSpec::yukawa(p("alpha"), p("a"));
            case PotentialKind::softcore:
                return PotentialSpec::softcore(p("alpha"), p("a"), p("q"));
            case PotentialKind::sech_squared:
                return PotentialSpec::sech_squared(p("beta"), p("b"));
            case PotentialKind::user_tabulated: {
                if (!j.contains("grid") || !j.contains("values"))
                    throw ConfigError(where +
                                      ": user_tabulated needs 'grid' and 'values'");
                auto grid = j.at("grid").get<std::vector<double>>();
                auto values = j.at("values").get<std::vector<double>>();
                if (!j.contains("tail") || !j.at("tail").is_string())
                    throw ConfigError(where + ": user_tabulated needs string 'tail'");
                return PotentialSpec::user_tabulated(
                    SampledFunction(Grid(std::move(grid)), std::move(values)),
                    tail_from_name(j.at("tail").get<std::string>(), where));
            }
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + ": unreachable");
}

json potential_to_json(const PotentialSpec& p) {
    json j;
    j["kind"] = p.kind_name();
    if (p.kind == PotentialKind::user_tabulated) {
        j["grid"] = p.table->grid.points;
        j["values"] = p.table->values;
        j["tail"] = tail_name(p.declared_tail);
        return j;
    }
    json params = json::object();
    const auto names = p.param_names();
    const double vals[3] = {p.p1, p.p2, p.p3};
    for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = vals[i];
    j["params"] = params;
    return j;
}

}  // namespace

ParsedConfig parse_config_text(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!root.is_object() || !root.contains("problem") ||
        !root.at("problem").is_object())
        throw ConfigError("config: missing top-level object 'problem'");
    const json& pj = root.at("problem");

    ParsedConfig out;
    DiracProblem& p = out.problem;
    p.mass = require_number(pj, "mass", "problem");
    if (p.mass <= 0) throw ConfigError("problem: mass must be > 0");
    p.dimension = static_cast<int>(pj.value("dimension", 1.0));
    if (p.dimension < 1) throw ConfigError("problem: dimension must be >= 1");
    if (!pj.contains("potential"))
        throw ConfigError("problem: missing key 'potential'");
    p.V = parse_potential(pj.at("potential"), "problem.potential");
    if (pj.contains("scalar"))
        p.S = parse_potential(pj.at("scalar"), "problem.scalar");

    if (!p.S) {
        const double s = require_number(pj, "symmetry", "problem");
        if (s != 1.0 && s != -1.0)
            throw ConfigError("problem: symmetry must be +1 or -1");
        p.mode = SymmetryMode(static_cast<int>(s));
    }

    if (p.dimension > 1) {
        const double j = require_number(pj, "j", "problem");
        const double tau = require_number(pj, "tau", "problem");
        if (tau != 1.0 && tau != -1.0)
            throw ConfigError("problem: tau must be +1 or -1");
        try {
            p.channel = Channel(p.dimension, j, static_cast<int>(tau));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("problem: ") + e.what());
        }
    } else if (pj.contains("parity")) {
        const json& pr = pj.at("parity");
        if (pr.is_string() && pr.get<std::string>() == "auto")
            p.parity.which_vanishes_at_origin = 0;
        else if (pr.is_number_integer() &&
                 (pr.get<int>() == 0 || pr.get<int>() == 1 || pr.get<int>() == 2))
            p.parity.which_vanishes_at_origin = pr.get<int>();
        else
            throw ConfigError("problem: parity must be \"auto\", 0, 1 or 2");
    }

    if (root.contains("numerics")) {
        const json& nj = root.at("numerics");
        if (!nj.is_object()) throw ConfigError("numerics: expected an object");
        SolverConfig& n = out.numerics;
        n.abs_tol = nj.value("abs_tol", n.abs_tol);
        n.rel_tol = nj.value("rel_tol", n.rel_tol);
        n.eig_tol = nj.value("eig_tol", n.eig_tol);
        n.scan_points = nj.value("scan_points", n.scan_points);
        if (n.abs_tol <= 0 || n.rel_tol <= 0 || n.eig_tol <= 0 || n.scan_points < 2)
            throw ConfigError("numerics: tolerances must be > 0, scan_points >= 2");
    }
    return out;
}

std::string config_to_text(const DiracProblem& problem, const SolverConfig& numerics) {
    json pj;
    pj["mass"] = problem.mass;
    pj["dimension"] = problem.dimension;
    pj["potential"] = potential_to_json(problem.V);
    if (problem.S)
        pj["scalar"] = potential_to_json(*problem.S);
    else
        pj["symmetry"] = problem.mode.s;
    if (problem.dimension > 1 && problem.channel) {
        pj["j"] = problem.channel->j;
        pj["tau"] = problem.channel->tau;
    } else if (problem.dimension == 1) {
        pj["parity"] = problem.parity.which_vanishes_at_origin;
    }
    json root;
    root["problem"] = pj;
    root["numerics"] = {{"abs_tol", numerics.abs_tol},
                        {"rel_tol", numerics.rel_tol},
                        {"eig_tol", numerics.eig_tol},
                        {"scan_points", numerics.scan_points}};
    return root.dump(2) + "\n";
}

void apply_env_overrides(SolverConfig& config) {
    auto getd = [](const char* name, double& target) {
        if (const char* v = std::getenv(name)) {
            try {
                target = std::stod(v);
            } catch (const std::exception&) {
                throw ConfigError(std::string(name) + ": invalid number '" + v + "'");
            }
        }
    };
    getd("DIRACCMP_ABS_TOL", config.abs_tol);
    getd("DIRACCMP_REL_TOL", config.rel_tol);
    getd("DIRACCMP_EIG_TOL", config.eig_tol);
    if (const char* v = std::getenv("DIRACCMP_SCAN_POINTS")) {
        try {
            config.scan_points = std::stoi(v);
        } catch (const std::exception&) {
            throw ConfigError(std::string("DIRACCMP_SCAN_POINTS: invalid integer '") +
                              v + "'");
        }
    }
}

void write_wavefunction_csv(std::ostream& os, const SampledFunction& c1,
                            const SampledFunction& c2) {
    os << "r,psi1,psi2\n" << std::setprecision(17);
    for (std::size_t i = 0; i < c1.size(); ++i)
        os << c1.grid.points[i] << ',' << c1.values[i] << ',' << c2.values[i]
           << '\n';
}

void write_curve_csv(std::ostream& os, const SampledFunction& curve) {
    os << "x,value\n" << std::setprecision(17);
    for (std::size_t i = 0; i < curve.size(); ++i)
        os << curve.grid.points[i] << ',' << curve.values[i] << '\n';
}

}  // namespace diraccmp
