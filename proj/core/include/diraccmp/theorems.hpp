#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diraccmp/problem.hpp"

namespace diraccmp {

enum class TransformKind { g, p, rho, mu };

std::string transform_name(TransformKind k);

/// A sampled cumulative transform of V_b - V_a with its sign verdict.
/// Nonnegativity over [0, inf) is certified by the dense minimum over
/// the sampled domain plus a bound on the remaining tail.
struct TransformCurve {
    TransformKind which;
    SampledFunction curve;     // curve(0) = 0 by construction
    double min_value = 0.0;    // over the sampled domain
    bool nonnegative = false;
    double final_value = 0.0;  // curve at the domain end
    double tail_bound = 0.0;   // bound on |excursion| beyond the domain
    bool tail_bounded = false; // false when no tail bound could be made
    std::string weight;        // descriptor of the integrand weight
};

/// Verified sign changes of V_b - V_a, in increasing order.
struct CrossingSet {
    std::vector<double> points;
    bool ordered_first_interval = false;  // V_a <= V_b on [0, x_1]
    std::size_t count() const { return points.size(); }
};

/// Unweighted cumulative area g(x) = int_0^x (V_b - V_a) dt.
TransformCurve transform_g(const PotentialSpec& Va, const PotentialSpec& Vb,
                           double x_max, const QuadratureConfig& config = {});

/// |phi_l|-weighted area; phi_l must be the component designated by the
/// symmetry mode (phi1 for s = +1, phi2 for s = -1) of either problem.
TransformCurve transform_p(const PotentialSpec& Va, const PotentialSpec& Vb,
                           const std::function<double(double)>& phi_l,
                           SymmetryMode mode, double x_max,
                           const QuadratureConfig& config = {});

/// r^{-2 s k_d}-weighted area; requires s k_d < 0.
TransformCurve transform_rho(const PotentialSpec& Va, const PotentialSpec& Vb,
                             SymmetryMode mode, const Channel& channel,
                             double r_max, const QuadratureConfig& config = {});

/// |psi_l| r^{-s k_d}-weighted area; requires s k_d < 0.
TransformCurve transform_mu(const PotentialSpec& Va, const PotentialSpec& Vb,
                            const std::function<double(double)>& psi_l,
                            SymmetryMode mode, const Channel& channel,
                            double r_max, const QuadratureConfig& config = {});

CrossingSet detect_crossings(const PotentialSpec& Va, const PotentialSpec& Vb,
                             double lo, double hi, double step = 0.0);

/// Absolute lobe areas of (V_b - V_a) * weight between consecutive
/// crossings, plus the tail beyond the last crossing when it converges.
struct AreaCheck {
    std::vector<double> lobes;
    bool nonincreasing = false;
    bool tail_included = false;   // last lobe extends to infinity
    bool applicable = false;      // first-interval ordering held
    bool verdict = false;         // transform >= 0 implied
};

AreaCheck corollary_area_check(const PotentialSpec& Va, const PotentialSpec& Vb,
                               const CrossingSet& crossings,
                               const std::function<double(double)>& weight,
                               const QuadratureConfig& config = {});

enum class Strategy { auto_select, basic, t1, t2, t3, t4, t5, c1, c2, c4, c5 };

enum class Ordering { a_leq_b, a_gt_b, inconclusive };

std::string strategy_name(Strategy s);

struct ComparisonReport {
    Strategy applied = Strategy::auto_select;
    bool hypothesis_satisfied = false;
    Ordering predicted = Ordering::inconclusive;
    double Ea = 0.0, Eb = 0.0;
    bool consistent = false;  // !hypothesis || ordering matches the solver
    std::optional<TransformCurve> transform;
    std::optional<CrossingSet> crossings;
    std::string note;
};

/// Applies the requested theorem (or, for auto_select, the cheapest
/// applicable one: pointwise ordering, then the area transforms, then
/// the wavefunction-weighted transforms) and verifies the predicted
/// ordering against solver eigenvalues. A satisfied hypothesis with
/// E_a > E_b is a falsification: consistent = false.
ComparisonReport compare(const DiracProblem& a, const DiracProblem& b,
                         Strategy strategy = Strategy::auto_select,
                         const SolverConfig& config = {});

}  // namespace diraccmp
