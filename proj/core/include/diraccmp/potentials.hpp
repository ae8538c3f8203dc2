#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "diraccmp/numerics.hpp"

namespace diraccmp {

/// Symmetry parameter s: +1 for S = V (spin symmetry), -1 for S = -V
/// (pseudo-spin symmetry). q selects the component housing the
/// Schrodinger-like reduction.
struct SymmetryMode {
    int s = +1;

    explicit SymmetryMode(int s_);
    SymmetryMode() = default;
    int q() const { return s > 0 ? 1 : 2; }
};

enum class PotentialKind {
    zero,
    harmonic,                  // a x^2
    sine_modulated_harmonic,   // b x^2 (1 + sin(x^3+beta)/(x^3+beta))
    coulomb,                   // -beta / r
    cutoff_coulomb,            // -v / (r + a)
    yukawa,                    // -alpha exp(-a r) / r
    softcore,                  // -alpha / (r^q + a^q)^(1/q)
    sech_squared,              // -4 beta / (exp(b r) + exp(-b r))^2
    user_tabulated,
};

enum class PotentialClass { class1, class2, class3, unclassified };

/// A parameterized radial (or, on the half-line, even) potential from
/// the catalog. Immutable after construction; build via the factories.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::zero;
    double p1 = 0.0, p2 = 0.0, p3 = 0.0;
    std::shared_ptr<const SampledFunction> table;          // user_tabulated only
    PotentialClass declared_tail = PotentialClass::unclassified;

    static PotentialSpec zero_potential();
    static PotentialSpec harmonic(double a);
    static PotentialSpec sine_modulated_harmonic(double b, double beta);
    static PotentialSpec coulomb(double beta);
    static PotentialSpec cutoff_coulomb(double v, double a);
    static PotentialSpec yukawa(double alpha, double a);
    static PotentialSpec softcore(double alpha, double a, double q);
    static PotentialSpec sech_squared(double beta, double b);
    static PotentialSpec user_tabulated(SampledFunction samples,
                                        PotentialClass declared_tail);

    bool operator==(const PotentialSpec& o) const;

    /// true for kinds with a 1/r singularity (d > 1 use only).
    bool singular_at_origin() const;

    /// Parameter names in p1, p2, p3 order (empty entries unused).
    std::vector<std::string> param_names() const;
    std::string kind_name() const;
};

PotentialKind kind_from_name(const std::string& name);

double eval(const PotentialSpec& spec, double r);

/// Asymptotic class under symmetry mode s, per the sign of sV and the
/// limit of V at infinity.
PotentialClass classify(const PotentialSpec& spec, SymmetryMode mode);

/// Open energy interval implied by the class: (1) -m < E < m;
/// (2) sE > m; (3) sE < -m. Unbounded ends are +-infinity.
struct EnergyWindow {
    double lo, hi;
    bool contains(double E) const { return E > lo && E < hi; }
};
EnergyWindow energy_window(PotentialClass cls, SymmetryMode mode, double m);

/// Pointwise difference V_b - V_a as a closure for quadrature and
/// crossing scans.
std::function<double(double)> difference(const PotentialSpec& a,
                                         const PotentialSpec& b);

/// Leading behavior near the origin: V(r) ~ inverse_r_coeff / r + constant_term.
struct OriginBehavior {
    double inverse_r_coeff = 0.0;
    double constant_term = 0.0;
};
OriginBehavior origin_behavior(const PotentialSpec& spec);

/// Limit of V at infinity: 0, +inf, or -inf (as HUGE_VAL values).
double limit_at_infinity(const PotentialSpec& spec);

/// Characteristic length over which the potential varies; used to set
/// scan steps and integration domains.
double length_scale(const PotentialSpec& spec);

}  // namespace diraccmp
