#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mfh/metric_space.hpp"

namespace mfh {

/// A space, a measure on it, and optionally the target set E (all points when absent).
struct Instance {
  std::string id;
  FiniteMetricSpace space;
  PointMeasure measure;
  std::optional<std::vector<PointIndex>> target;

  std::vector<PointIndex> target_or_all() const;
};

/// Seeded generator with library-independent conversions, so that outputs are identical
/// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform in [0, n).
  std::size_t below(std::size_t n);
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Left endpoints of the level-L cylinders of {x -> c x, x -> c x + 1 - c}, weighted by the
/// self-similar measure with probabilities (p, 1 - p). epsilon_net = c^L. Throws LevelTooLarge
/// for L > 14.
Instance cantor_net(int level, double c, double p);

/// Shortest-path metric of the unit n-cycle, uniform measure, epsilon_net 0.5.
Instance cycle_metric(std::size_t n);

/// n points per axis spread over [0, 1]^d, d in {1, 2}; uniform measure.
Instance uniform_grid(std::size_t n, std::size_t d);

/// n uniform points in [0, 1]^d, d in {1, 2}; uniform measure.
Instance random_cloud(std::size_t n, std::size_t d, std::uint64_t seed);

/// Positive masses drawn from [0.05, 1) and normalized.
PointMeasure random_measure(std::size_t n, Rng& rng);

/// Like random_measure, but the listed points get mass zero (at least one point keeps mass).
PointMeasure random_measure_with_zeros(std::size_t n, const std::vector<PointIndex>& zeros,
                                       Rng& rng);

}  // namespace mfh
