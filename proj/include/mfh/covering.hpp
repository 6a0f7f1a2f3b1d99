#pragma once

#include <string>
#include <vector>

#include "mfh/extended.hpp"
#include "mfh/metric_space.hpp"
#include "mfh/premeasure.hpp"

namespace mfh {

/// Greedy disjoint packing. Indices refer to the input family.
struct VitaliPacking {
  std::vector<std::size_t> chosen;   // in selection order
  std::vector<std::size_t> blocker;  // per input ball: a chosen ball meeting it with radius >= its own
};

/// Balls taken by descending radius (ties by input order) whenever their member set is
/// disjoint from every ball already taken.
VitaliPacking vitali_5r_packing(const FiniteMetricSpace& space, const std::vector<Ball>& balls);

struct PackingCheck {
  bool disjoint = false;
  bool blockers_valid = false;
  bool covered_by_5r = false;
  std::vector<std::string> problems;
  bool ok() const { return disjoint && blockers_valid && covered_by_5r; }
};

/// Exhaustive membership verification of a packing against its input family.
PackingCheck check_vitali(const FiniteMetricSpace& space, const std::vector<Ball>& balls,
                          const VitaliPacking& packing);

struct BesicovitchFamilies {
  std::vector<Ball> selected;
  std::vector<std::vector<Ball>> families;  // partition of `selected`
  std::size_t count() const { return families.size(); }
};

/// Centers processed by descending radius; a ball is selected when its center is not yet
/// covered; selected balls are split into disjoint families by greedy coloring of their
/// (Euclidean) intersection graph. Requires coordinates of dimension 1 or 2.
BesicovitchFamilies besicovitch_families(const FiniteMetricSpace& space,
                                         const std::vector<PointIndex>& centers,
                                         const std::vector<double>& radii);

struct FamiliesCheck {
  bool disjoint_within = false;
  bool centers_covered = false;
  std::vector<std::string> problems;
  bool ok() const { return disjoint_within && centers_covered; }
};

FamiliesCheck check_besicovitch(const FiniteMetricSpace& space,
                                const std::vector<PointIndex>& centers,
                                const BesicovitchFamilies& result);

struct Subfamily3r {
  std::vector<std::size_t> indices;  // into the input cover, selection order
  Extended subfamily_cost;           // sum of weight_term(B_ij)
  Extended weighted_cost;            // sum of c_i * weight_term(B_i)
  double ratio = 0.0;                // subfamily_cost / weighted_cost; +inf if the input cost is
};

/// Selects disjoint balls from a weighted cover of `target` so that their 3-dilates cover it.
/// Throws InvalidWeightedCover when the weights do not cover every target point.
Subfamily3r subfamily_3r_reduction(const FiniteMetricSpace& space, const std::vector<Ball>& balls,
                                   const std::vector<double>& weights, const PointMeasure& mu,
                                   double q, const Premeasure& xi,
                                   const std::vector<PointIndex>& target);

/// max over the balls of weight_term(3B) / weight_term(B). Pairs with both terms zero or both
/// infinite are skipped; a zero term under a positive dilate gives infinity.
Extended three_ball_constant(const FiniteMetricSpace& space, const PointMeasure& mu, double q,
                             const Premeasure& xi, const std::vector<Ball>& balls);

}  // namespace mfh
