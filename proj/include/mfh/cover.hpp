#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mfh/extended.hpp"
#include "mfh/metric_space.hpp"
#include "mfh/premeasure.hpp"

namespace mfh {

/// Absolute tolerance for every optimizer comparison.
inline constexpr double kSolverTolerance = 1e-9;

/// A weighted set-covering problem over targets 0..num_targets-1.
/// incidence[i] holds the targets covered by candidate i.
struct CoverProblem {
  std::size_t num_targets = 0;
  std::vector<PointSet> incidence;
  std::vector<Extended> costs;

  std::size_t num_candidates() const { return costs.size(); }
};

enum class CoverStatus { kOptimal, kInfeasibleInfinite };

struct IntegerCoverSolution {
  std::vector<std::size_t> chosen;  // candidate indices, ascending
  Extended value;
  CoverStatus status = CoverStatus::kOptimal;
  std::uint64_t nodes = 0;
};

struct FractionalCoverSolution {
  std::vector<double> weights;  // c_i per candidate; 0 on infinite-cost candidates
  Extended value;               // primal objective
  std::vector<double> dual;     // y_x per target
  double dual_value = 0.0;
  double gap = 0.0;
  CoverStatus status = CoverStatus::kOptimal;
  std::uint64_t iterations = 0;
};

struct IntegerSolverOptions {
  std::uint64_t node_limit = std::uint64_t{1} << 30;
};

/// Exact minimum-cost integer cover by branch-and-bound.
/// Throws CandidateLimitExceeded with the final bound interval when the node budget runs out.
IntegerCoverSolution solve_integer_cover(const CoverProblem& problem,
                                         const IntegerSolverOptions& options = {});

/// Optimal fractional cover (covering LP) with a verified dual certificate.
/// Throws NumericalFailure when the gap cannot be closed to 1e-9 * max(1, value).
FractionalCoverSolution solve_fractional_cover(const CoverProblem& problem);

struct CertificateCheck {
  double min_coverage = 0.0;      // min over targets of sum of covering weights
  double max_dual_excess = 0.0;   // max over finite candidates of (dual load - cost)
  double min_dual = 0.0;
  double gap = 0.0;
  bool ok = false;
};

/// Re-checks primal feasibility, dual feasibility and the duality gap from the raw data.
CertificateCheck check_certificate(const CoverProblem& problem,
                                   const FractionalCoverSolution& solution);

struct OracleValues {
  Extended integer;
  Extended fractional;
};

/// Exhaustive reference solver: integer optimum over all 2^n candidate subsets, fractional
/// optimum over all basic solutions of the covering polyhedron. At most 20 candidates and
/// 10 targets, else SizeLimit.
OracleValues brute_force_oracle(const CoverProblem& problem);

// ---------------------------------------------------------------------------
// Pre-measure instances on metric spaces.

using Candidate = std::variant<Ball, Rectangle>;

struct CoverInstance {
  std::vector<PointIndex> targets;       // point (or pair) indices, ascending
  std::vector<Candidate> candidates;
  std::vector<double> candidate_mass;    // mu(B) per candidate
  CoverProblem problem;
};

/// Balls centered in E with radius <= delta, costed by weight_term.
CoverInstance centered_instance(const FiniteMetricSpace& space, const PointMeasure& mu,
                                double q, const Premeasure& xi,
                                const std::vector<PointIndex>& target, double delta);

/// Same costs, but centers range over the whole space.
CoverInstance noncentered_instance(const FiniteMetricSpace& space, const PointMeasure& mu,
                                   double q, const Premeasure& xi,
                                   const std::vector<PointIndex>& target, double delta);

/// Ball rectangles centered in E x F; mu_left x mu_right masses.
CoverInstance rectangle_instance(const ProductSpace& space, const PointMeasure& mu_left,
                                 const PointMeasure& mu_right, double q,
                                 const RectanglePremeasure& xi,
                                 const std::vector<PointIndex>& left_set,
                                 const std::vector<PointIndex>& right_set, double delta);

/// H^{q,xi}_{mu,delta}(E).
IntegerCoverSolution hausdorff_premeasure(const FiniteMetricSpace& space, const PointMeasure& mu,
                                          double q, const Premeasure& xi,
                                          const std::vector<PointIndex>& target, double delta,
                                          const IntegerSolverOptions& options = {});

/// W^{q,xi}_{mu,delta}(E).
FractionalCoverSolution weighted_premeasure(const FiniteMetricSpace& space,
                                            const PointMeasure& mu, double q,
                                            const Premeasure& xi,
                                            const std::vector<PointIndex>& target,
                                            double delta);

/// Non-centered weighted pre-measure (centers need not lie in E).
FractionalCoverSolution noncentered_weighted_premeasure(const FiniteMetricSpace& space,
                                                        const PointMeasure& mu, double q,
                                                        const Premeasure& xi,
                                                        const std::vector<PointIndex>& target,
                                                        double delta);

struct ProductValues {
  IntegerCoverSolution h;
  FractionalCoverSolution w;
};

/// H and W of E x F over the rectangle family.
ProductValues product_premeasure_values(const ProductSpace& space, const PointMeasure& mu_left,
                                        const PointMeasure& mu_right, double q,
                                        const RectanglePremeasure& xi,
                                        const std::vector<PointIndex>& left_set,
                                        const std::vector<PointIndex>& right_set, double delta,
                                        const IntegerSolverOptions& options = {});

struct DeltaProfileEntry {
  double delta;
  Extended h_value;
  Extended w_value;
  Extended noncentered_w_value;
};

struct DeltaProfile {
  std::vector<DeltaProfileEntry> entries;
};

/// Exact values per delta, deltas sorted descending. Throws Error if the nested-family
/// monotonicity is violated by more than 1e-9.
DeltaProfile delta_profile(const FiniteMetricSpace& space, const PointMeasure& mu, double q,
                           const Premeasure& xi, const std::vector<PointIndex>& target,
                           const std::vector<double>& deltas);

}  // namespace mfh
