#include <cstdlib>
#include <sstream>

#include "diraccmp/io.hpp"
#include "doctest.h"

using namespace diraccmp;

TEST_CASE("parse a complete 1D config") {
    const std::string text = R"({
      "problem": {
        "mass": 1.2,
        "symmetry": 1,
        "potential": {"kind": "harmonic", "params": {"a": 0.5}},
        "parity": "auto"
      },
      "numerics": {"eig_tol": 1e-9}
    })";
    const auto cfg = parse_config_text(text);
    CHECK(cfg.problem.mass == 1.2);
    CHECK(cfg.problem.dimension == 1);
    CHECK(cfg.problem.mode.s == 1);
    CHECK(cfg.problem.V.kind == PotentialKind::harmonic);
    CHECK(cfg.problem.V.p1 == 0.5);
    CHECK_FALSE(cfg.problem.S.has_value());
    CHECK(cfg.problem.parity.which_vanishes_at_origin == 0);
    CHECK(cfg.numerics.eig_tol == 1e-9);
    CHECK(cfg.numerics.abs_tol == SolverConfig{}.abs_tol);  // default kept
}

TEST_CASE("parse a radial config with an explicit scalar") {
    const std::string text = R"({
      "problem": {
        "mass": 1.0,
        "dimension": 5,
        "j": 0.5,
        "tau": -1,
        "potential": {"kind": "softcore", "params": {"alpha": 0.8, "a": 1.6, "q": 3}},
        "scalar": {"kind": "coulomb", "params": {"beta": 0.7}}
      }
    })";
    const auto cfg = parse_config_text(text);
    CHECK(cfg.problem.dimension == 5);
    REQUIRE(cfg.problem.channel.has_value());
    CHECK(cfg.problem.channel->kd() == doctest::Approx(-2.0));
    REQUIRE(cfg.problem.S.has_value());
    CHECK(cfg.problem.S->kind == PotentialKind::coulomb);
    CHECK_FALSE(cfg.problem.has_symmetry());
}

TEST_CASE("schema violations raise descriptive errors") {
    auto wrap = [](const std::string& inner) {
        return "{\"problem\": {" + inner + "}}";
    };
    // malformed JSON
    CHECK_THROWS_AS(parse_config_text("{nope"), ConfigError);
    // missing problem object
    CHECK_THROWS_AS(parse_config_text("{}"), ConfigError);
    // missing mass
    CHECK_THROWS_AS(parse_config_text(wrap(
                        R"("symmetry": 1, "potential": {"kind": "zero"})")),
                    ConfigError);
    // nonpositive mass
    CHECK_THROWS_AS(parse_config_text(wrap(
                        R"("mass": -1, "symmetry": 1, "potential": {"kind": "zero"})")),
                    ConfigError);
    // missing potential
    CHECK_THROWS_AS(parse_config_text(wrap(R"("mass": 1, "symmetry": 1)")),
                    ConfigError);
    // unknown kind
    CHECK_THROWS_AS(
        parse_config_text(wrap(
            R"("mass": 1, "symmetry": 1, "potential": {"kind": "woods_saxon"})")),
        ConfigError);
    // missing parameter
    CHECK_THROWS_AS(
        parse_config_text(wrap(
            R"("mass": 1, "symmetry": 1, "potential": {"kind": "harmonic"})")),
        ConfigError);
    // out-of-range parameter surfaces as a config error
    CHECK_THROWS_AS(
        parse_config_text(wrap(
            R"("mass": 1, "symmetry": 1, "potential": {"kind": "harmonic", "params": {"a": -0.5}})")),
        ConfigError);
    // bad symmetry
    CHECK_THROWS_AS(
        parse_config_text(wrap(
            R"("mass": 1, "symmetry": 2, "potential": {"kind": "zero"})")),
        ConfigError);
    // symmetry required when no scalar is given
    CHECK_THROWS_AS(parse_config_text(wrap(
                        R"("mass": 1, "potential": {"kind": "zero"})")),
                    ConfigError);
    // bad parity
    CHECK_THROWS_AS(
        parse_config_text(wrap(
            R"("mass": 1, "symmetry": 1, "potential": {"kind": "zero"}, "parity": 3)")),
        ConfigError);
    // dimension > 1 needs j and tau
    CHECK_THROWS_AS(
        parse_config_text(wrap(
            R"("mass": 1, "dimension": 3, "symmetry": 1, "potential": {"kind": "zero"})")),
        ConfigError);
    // bad channel numbers
    CHECK_THROWS_AS(
        parse_config_text(wrap(
            R"("mass": 1, "dimension": 3, "j": 0.6, "tau": 1, "symmetry": 1, "potential": {"kind": "zero"})")),
        ConfigError);
    // bad numerics
    CHECK_THROWS_AS(
        parse_config_text(
            R"({"problem": {"mass": 1, "symmetry": 1, "potential": {"kind": "zero"}},
                "numerics": {"abs_tol": -1}})"),
        ConfigError);
}

TEST_CASE("canonical serialization round-trips and is idempotent") {
    DiracProblem p;
    p.V = PotentialSpec::yukawa(0.2, 0.1);
    p.mode = SymmetryMode(+1);
    p.mass = 1.0;
    p.dimension = 2;
    p.channel = Channel(2, 0.5, -1);
    SolverConfig n;
    n.eig_tol = 1e-9;

    const std::string text = config_to_text(p, n);
    const auto back = parse_config_text(text);
    CHECK(back.problem.mass == p.mass);
    CHECK(back.problem.dimension == p.dimension);
    CHECK(back.problem.V.kind == p.V.kind);
    CHECK(back.problem.V.p1 == p.V.p1);
    CHECK(back.problem.V.p2 == p.V.p2);
    CHECK(*back.problem.channel == *p.channel);
    CHECK(back.numerics.eig_tol == n.eig_tol);

    // serializing the parsed config reproduces the text exactly
    CHECK(config_to_text(back.problem, back.numerics) == text);
}

TEST_CASE("tabulated potentials survive the round trip") {
    DiracProblem p;
    p.V = PotentialSpec::user_tabulated(
        SampledFunction(Grid({0.0, 1.0, 2.0}), {-1.0, -0.5, 0.0}),
        PotentialClass::class1);
    p.mode = SymmetryMode(+1);
    p.mass = 1.0;
    const auto back = parse_config_text(config_to_text(p, {}));
    CHECK(back.problem.V.kind == PotentialKind::user_tabulated);
    REQUIRE(back.problem.V.table != nullptr);
    CHECK(back.problem.V.table->values[1] == -0.5);
    CHECK(back.problem.V.declared_tail == PotentialClass::class1);
}

TEST_CASE("environment overrides") {
    setenv("DIRACCMP_ABS_TOL", "1e-8", 1);
    setenv("DIRACCMP_SCAN_POINTS", "123", 1);
    SolverConfig c;
    apply_env_overrides(c);
    CHECK(c.abs_tol == 1e-8);
    CHECK(c.scan_points == 123);
    CHECK(c.rel_tol == SolverConfig{}.rel_tol);

    setenv("DIRACCMP_ABS_TOL", "not-a-number", 1);
    SolverConfig d;
    CHECK_THROWS_AS(apply_env_overrides(d), ConfigError);

    unsetenv("DIRACCMP_ABS_TOL");
    unsetenv("DIRACCMP_SCAN_POINTS");
    SolverConfig e;
    apply_env_overrides(e);
    CHECK(e.abs_tol == SolverConfig{}.abs_tol);
}

TEST_CASE("CSV writers emit headers and full precision") {
    SampledFunction c1(Grid({0.0, 0.5, 1.0}), {0.0, 0.25, 1.0 / 3.0});
    SampledFunction c2(Grid({0.0, 0.5, 1.0}), {1.0, 0.5, 0.0});
    std::ostringstream w;
    write_wavefunction_csv(w, c1, c2);
    CHECK(w.str().substr(0, 12) == "r,psi1,psi2\n");
    CHECK(w.str().find("0.33333333333333331") != std::string::npos);

    std::ostringstream k;
    write_curve_csv(k, c1);
    CHECK(k.str().substr(0, 8) == "x,value\n");
    // identical inputs produce byte-identical output
    std::ostringstream k2;
    write_curve_csv(k2, c1);
    CHECK(k.str() == k2.str());
}
