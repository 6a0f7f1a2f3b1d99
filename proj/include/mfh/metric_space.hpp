#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mfh/errors.hpp"
#include "mfh/extended.hpp"
#include "mfh/point_set.hpp"

namespace mfh {

using PointIndex = std::size_t;

/// Tolerance used by structural invariant checks (triangle inequality, mass sums).
inline constexpr double kInvariantTolerance = 1e-12;

struct SpaceViolation {
  enum class Kind {
    kEmpty,
    kNonSquare,
    kRaggedCoordinates,
    kNonFinite,
    kNegativeDistance,
    kNonzeroDiagonal,
    kAsymmetricDistance,
    kZeroDistance,
    kTriangleViolation,
    kCoordinateMismatch,
    kDuplicateId,
    kNonPositiveEpsilon,
    kEpsilonAboveResolution,
  };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  std::string describe() const;
  friend bool operator==(const SpaceViolation&, const SpaceViolation&) = default;
};

/// Raised by validate_space; carries every violated invariant, not just the first.
class InvalidSpace : public Error {
 public:
  explicit InvalidSpace(std::vector<SpaceViolation> violations);
  const std::vector<SpaceViolation>& violations() const { return violations_; }
  bool has(SpaceViolation::Kind kind) const;

 private:
  std::vector<SpaceViolation> violations_;
};

/// Unvalidated input for validate_space. Exactly one of dist or coords is
/// normally given; when both are present they must agree within 1e-12.
struct RawSpace {
  std::vector<std::string> ids;  // empty: ids default to "0", "1", ...
  std::optional<std::vector<std::vector<double>>> dist;
  std::optional<std::vector<std::vector<double>>> coords;
  double epsilon_net = 0.0;
};

/// A validated finite metric space. Immutable.
class FiniteMetricSpace {
 public:
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  double distance(PointIndex i, PointIndex j) const { return dist_[i * size() + j]; }
  double epsilon_net() const { return epsilon_net_; }
  bool has_coords() const { return !coords_.empty(); }
  const std::vector<std::vector<double>>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.empty() ? 0 : coords_.front().size(); }
  std::optional<PointIndex> index_of(const std::string& id) const;
  /// Smallest distance between distinct points; +inf for a one-point space.
  double min_positive_distance() const;
  std::vector<std::vector<double>> distance_matrix() const;

 private:
  friend FiniteMetricSpace validate_space(const RawSpace& raw);
  std::vector<std::string> ids_;
  std::vector<double> dist_;
  std::vector<std::vector<double>> coords_;
  double epsilon_net_ = 0.0;
};

/// Every invariant the raw input violates; empty when valid.
std::vector<SpaceViolation> check_space(const RawSpace& raw);

/// Throws InvalidSpace listing all violations.
FiniteMetricSpace validate_space(const RawSpace& raw);

FiniteMetricSpace space_from_matrix(std::vector<std::vector<double>> dist, double epsilon_net,
                                    std::vector<std::string> ids = {});
FiniteMetricSpace space_from_coords(std::vector<std::vector<double>> coords,
                                    double epsilon_net, std::vector<std::string> ids = {});

/// Probability mass per point.
class PointMeasure {
 public:
  /// Throws InvalidMeasure unless masses are nonnegative and sum to 1 within 1e-12.
  static PointMeasure from_masses(std::vector<double> masses);
  static PointMeasure uniform(std::size_t n);

  std::size_t size() const { return masses_.size(); }
  double mass(PointIndex i) const { return masses_[i]; }
  const std::vector<double>& masses() const { return masses_; }
  double mass_of(const PointSet& set) const;
  double mass_of(const std::vector<PointIndex>& points) const;
  std::vector<PointIndex> support() const;
  bool full_support() const;

 private:
  std::vector<double> masses_;
};

/// Closed ball identified by (center, nominal radius), never by its member set.
struct Ball {
  PointIndex center = 0;
  double radius = 0.0;

  double nominal_diameter() const { return 2.0 * radius; }
  Ball dilated(double factor) const { return Ball{center, radius * factor}; }
  friend auto operator<=>(const Ball&, const Ball&) = default;
};

/// { j : dist(center, j) <= radius }. Throws UnknownCenter.
PointSet ball_members(const FiniteMetricSpace& space, const Ball& ball);

/// Set diameter of the members (0 for a singleton).
double realized_diameter(const FiniteMetricSpace& space, const PointSet& members);

/// Radii ({dist(center, j) : 0 < dist <= delta} u {epsilon_net}) within [epsilon_net, delta],
/// ascending and duplicate-free.
std::vector<double> radius_grid(const FiniteMetricSpace& space, PointIndex center, double delta);

/// All grid balls centered in `centers` with radius <= delta, ordered by (center, radius).
/// Throws DeltaBelowResolution when delta < epsilon_net.
std::vector<Ball> enumerate_centered_balls(const FiniteMetricSpace& space,
                                           const std::vector<PointIndex>& centers, double delta);

/// Grid balls centered anywhere in the space.
std::vector<Ball> enumerate_all_balls(const FiniteMetricSpace& space, double delta);

/// Product of two spaces under the max metric. Pair (i, j) has index i * right.size() + j.
class ProductSpace {
 public:
  ProductSpace(FiniteMetricSpace left, FiniteMetricSpace right);

  const FiniteMetricSpace& left() const { return left_; }
  const FiniteMetricSpace& right() const { return right_; }
  std::size_t size() const { return left_.size() * right_.size(); }
  PointIndex pair_index(PointIndex i, PointIndex j) const { return i * right_.size() + j; }
  PointIndex left_of(PointIndex pair) const { return pair / right_.size(); }
  PointIndex right_of(PointIndex pair) const { return pair % right_.size(); }
  double distance(PointIndex a, PointIndex b) const;
  double epsilon_net() const;
  /// The product as a plain finite metric space (ids "(a,b)").
  FiniteMetricSpace as_metric_space() const;

 private:
  FiniteMetricSpace left_;
  FiniteMetricSpace right_;
};

ProductSpace product_space(FiniteMetricSpace left, FiniteMetricSpace right);

/// mass(i, j) = mu(i) * nu(j), indexed like ProductSpace.
PointMeasure product_measure(const PointMeasure& mu, const PointMeasure& nu);

/// Ball rectangle B x B' with independent radii per factor.
struct Rectangle {
  Ball left;
  Ball right;

  double nominal_diameter() const {
    return left.nominal_diameter() > right.nominal_diameter() ? left.nominal_diameter()
                                                              : right.nominal_diameter();
  }
  friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

PointSet rectangle_members(const ProductSpace& space, const Rectangle& rect);

/// left_ball in enumerate_centered_balls(left, E, delta) crossed with the same for F.
/// Throws DeltaBelowResolution when delta is below the product resolution.
std::vector<Rectangle> enumerate_centered_rectangles(const ProductSpace& space,
                                                     const std::vector<PointIndex>& left_set,
                                                     const std::vector<PointIndex>& right_set,
                                                     double delta);

}  // namespace mfh
