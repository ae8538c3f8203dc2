#include "diraccmp/potentials.hpp"

#include <cmath>
#include <limits>

namespace diraccmp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}
}  // namespace

SymmetryMode::SymmetryMode(int s_) : s(s_) {
    require(s == 1 || s == -1, "SymmetryMode: s must be +1 or -1");
}

PotentialSpec PotentialSpec::zero_potential() { return {}; }

PotentialSpec PotentialSpec::harmonic(double a) {
    require(a > 0, "harmonic: a must be > 0");
    PotentialSpec p;
    p.kind = PotentialKind::harmonic;
    p.p1 = a;
    return p;
}

PotentialSpec PotentialSpec::sine_modulated_harmonic(double b, double beta) {
    require(b > 0, "sine_modulated_harmonic: b must be > 0");
    require(beta > 0, "sine_modulated_harmonic: beta must be > 0");
    PotentialSpec p;
    p.kind = PotentialKind::sine_modulated_harmonic;
    p.p1 = b;
    p.p2 = beta;
    return p;
}

PotentialSpec PotentialSpec::coulomb(double beta) {
    require(beta > 0, "coulomb: beta must be > 0");
    PotentialSpec p;
    p.kind = PotentialKind::coulomb;
    p.p1 = beta;
    return p;
}

PotentialSpec PotentialSpec::cutoff_coulomb(double v, double a) {
    require(v > 0, "cutoff_coulomb: v must be > 0");
    require(a > 0, "cutoff_coulomb: a must be > 0");
    PotentialSpec p;
    p.kind = PotentialKind::cutoff_coulomb;
    p.p1 = v;
    p.p2 = a;
    return p;
}

PotentialSpec PotentialSpec::yukawa(double alpha, double a) {
    require(alpha > 0, "yukawa: alpha must be > 0");
    require(a > 0, "yukawa: a must be > 0");
    PotentialSpec p;
    p.kind = PotentialKind::yukawa;
    p.p1 = alpha;
    p.p2 = a;
    return p;
}

PotentialSpec PotentialSpec::softcore(double alpha, double a, double q) {
    require(alpha > 0, "softcore: alpha must be > 0");
    require(a > 0, "softcore: a must be > 0");
    require(q >= 1, "softcore: q must be >= 1");
    PotentialSpec p;
    p.kind = PotentialKind::softcore;
    p.p1 = alpha;
    p.p2 = a;
    p.p3 = q;
    return p;
}

PotentialSpec PotentialSpec::sech_squared(double beta, double b) {
    require(beta > 0, "sech_squared: beta must be > 0");
    require(b > 0, "sech_squared: b must be > 0");
    PotentialSpec p;
    p.kind = PotentialKind::sech_squared;
    p.p1 = beta;
    p.p2 = b;
    return p;
}

PotentialSpec PotentialSpec::user_tabulated(SampledFunction samples,
                                            PotentialClass declared_tail) {
    require(declared_tail != PotentialClass::unclassified,
            "user_tabulated: tail class must be declared");
    PotentialSpec p;
    p.kind = PotentialKind::user_tabulated;
    p.table = std::make_shared<SampledFunction>(std::move(samples));
    p.declared_tail = declared_tail;
    return p;
}

bool PotentialSpec::operator==(const PotentialSpec& o) const {
    return kind == o.kind && p1 == o.p1 && p2 == o.p2 && p3 == o.p3 &&
           table == o.table && declared_tail == o.declared_tail;
}

bool PotentialSpec::singular_at_origin() const {
    return kind == PotentialKind::coulomb || kind == PotentialKind::yukawa;
}

std::vector<std::string> PotentialSpec::param_names() const {
    switch (kind) {
        case PotentialKind::zero: return {};
        case PotentialKind::harmonic: return {"a"};
        case PotentialKind::sine_modulated_harmonic: return {"b", "beta"};
        case PotentialKind::coulomb: return {"beta"};
        case PotentialKind::cutoff_coulomb: return {"v", "a"};
        case PotentialKind::yukawa: return {"alpha", "a"};
        case PotentialKind::softcore: return {"alpha", "a", "q"};
        case PotentialKind::sech_squared: return {"beta", "b"};
        case PotentialKind::user_tabulated: return {};
    }
    return {};
}

std::string PotentialSpec::kind_name() const {
    switch (kind) {
        case PotentialKind::zero: return "zero";
        case PotentialKind::harmonic: return "harmonic";
        case PotentialKind::sine_modulated_harmonic: return "sine_modulated_harmonic";
        case PotentialKind::coulomb: return "coulomb";
        case PotentialKind::cutoff_coulomb: return "cutoff_coulomb";
        case PotentialKind::yukawa: return "yukawa";
        case PotentialKind::softcore: return "softcore";
        case PotentialKind::sech_squared: return "sech_squared";
        case PotentialKind::user_tabulated: return "user_tabulated";
    }
    return "zero";
}

PotentialKind kind_from_name(const std::string& name) {
    if (name == "zero") return PotentialKind::zero;
    if (name == "harmonic") return PotentialKind::harmonic;
    if (name == "sine_modulated_harmonic") return PotentialKind::sine_modulated_harmonic;
    if (name == "coulomb") return PotentialKind::coulomb;
    if (name == "cutoff_coulomb") return PotentialKind::cutoff_coulomb;
    if (name == "yukawa") return PotentialKind::yukawa;
    if (name == "softcore") return PotentialKind::softcore;
    if (name == "sech_squared") return PotentialKind::sech_squared;
    if (name == "user_tabulated") return PotentialKind::user_tabulated;
    throw std::invalid_argument("unknown potential kind: " + name);
}

double eval(const PotentialSpec& spec, double r) {
    // 1D callers pass |x|; the catalog is defined on the half-line.
    r = std::abs(r);
    switch (spec.kind) {
        case PotentialKind::zero:
            return 0.0;
        case PotentialKind::harmonic:
            return spec.p1 * r * r;
        case PotentialKind::sine_modulated_harmonic: {
            const double u = r * r * r + spec.p2;
            return spec.p1 * r * r * (1.0 + std::sin(u) / u);
        }
        case PotentialKind::coulomb:
            if (r == 0) throw std::domain_error("coulomb: singular at r = 0");
            return -spec.p1 / r;
        case PotentialKind::cutoff_coulomb:
            return -spec.p1 / (r + spec.p2);
        case PotentialKind::yukawa:
            if (r == 0) throw std::domain_error("yukawa: singular at r = 0");
            return -spec.p1 * std::exp(-spec.p2 * r) / r;
        case PotentialKind::softcore:
            return -spec.p1 /
                   std::pow(std::pow(r, spec.p3) + std::pow(spec.p2, spec.p3),
                            1.0 / spec.p3);
        case PotentialKind::sech_squared: {
            const double c = std::exp(spec.p2 * r) + std::exp(-spec.p2 * r);
            return -4.0 * spec.p1 / (c * c);
        }
        case PotentialKind::user_tabulated:
            return (*spec.table)(r);
    }
    return 0.0;
}

double limit_at_infinity(const PotentialSpec& spec) {
    switch (spec.kind) {
        case PotentialKind::harmonic:
        case PotentialKind::sine_modulated_harmonic:
            return kInf;
        case PotentialKind::user_tabulated:
            // tail class is declared, not inferred; callers use classify()
            return spec.table->values.back();
        default:
            return 0.0;
    }
}

PotentialClass classify(const PotentialSpec& spec, SymmetryMode mode) {
    if (spec.kind == PotentialKind::user_tabulated) return spec.declared_tail;
    if (spec.kind == PotentialKind::zero) return PotentialClass::unclassified;

    // Catalog kinds have definite sign: the harmonic family is >= 0,
    // the attractive family is <= 0.
    const bool nonneg = spec.kind == PotentialKind::harmonic ||
                        spec.kind == PotentialKind::sine_modulated_harmonic;
    const double lim = limit_at_infinity(spec);
    const bool sV_nonpos = mode.s > 0 ? !nonneg : nonneg;
    const bool sV_nonneg = mode.s > 0 ? nonneg : !nonneg;

    if (sV_nonpos && lim == 0.0) return PotentialClass::class1;
    if (sV_nonneg && std::isinf(lim) && (mode.s > 0) == (lim > 0))
        return PotentialClass::class2;
    if (sV_nonpos && std::isinf(lim) && (mode.s > 0) == (lim < 0))
        return PotentialClass::class3;
    return PotentialClass::unclassified;
}

EnergyWindow energy_window(PotentialClass cls, SymmetryMode mode, double m) {
    switch (cls) {
        case PotentialClass::class1:
            return {-m, m};
        case PotentialClass::class2:  // sE > m
            return mode.s > 0 ? EnergyWindow{m, kInf} : EnergyWindow{-kInf, -m};
        case PotentialClass::class3:  // sE < -m
            return mode.s > 0 ? EnergyWindow{-kInf, -m} : EnergyWindow{m, kInf};
        case PotentialClass::unclassified:
            break;
    }
    throw std::invalid_argument("energy_window: unclassified potential");
}

std::function<double(double)> difference(const PotentialSpec& a,
                                         const PotentialSpec& b) {
    return [a, b](double r) { return eval(b, r) - eval(a, r); };
}

OriginBehavior origin_behavior(const PotentialSpec& spec) {
    switch (spec.kind) {
        case PotentialKind::coulomb:
            return {-spec.p1, 0.0};
        case PotentialKind::yukawa:
            return {-spec.p1, spec.p1 * spec.p2};
        default:
            return {0.0, eval(spec, 0.0)};
    }
}

double length_scale(const PotentialSpec& spec) {
    switch (spec.kind) {
        case PotentialKind::harmonic:
            return 1.0 / std::sqrt(std::sqrt(spec.p1));
        case PotentialKind::sine_modulated_harmonic:
            return 1.0 / std::sqrt(std::sqrt(spec.p1));
        case PotentialKind::coulomb:
            return 1.0 / spec.p1;
        case PotentialKind::cutoff_coulomb:
            return std::max(1.0, spec.p2);
        case PotentialKind::yukawa:
            return 1.0 / spec.p2;
        case PotentialKind::softcore:
            return spec.p2;
        case PotentialKind::sech_squared:
            return 1.0 / spec.p2;
        case PotentialKind::user_tabulated:
            return spec.table->grid.back() / 10.0;
        case PotentialKind::zero:
            return 1.0;
    }
    return 1.0;
}

}  // namespace diraccmp
