#pragma once

#include <vector>

#include "mfh/cover.hpp"
#include "mfh/extended.hpp"
#include "mfh/metric_space.hpp"
#include "mfh/premeasure.hpp"

namespace mfh {

/// max over grid radii r and x in supp(mu) of mu(B(x, a r)) / mu(B(x, r)). Throws EmptyGrid.
double blanketing_ratio(const FiniteMetricSpace& space, const PointMeasure& mu, double a,
                        const std::vector<double>& radii);

/// Smallest K with xi(B(x, 2r)) <= K xi(B(x, r)) over every point and grid radius.
/// Throws EmptyGrid, and ZeroDenominator when some xi(B(x, r)) vanishes.
double premeasure_doubling(const FiniteMetricSpace& space, const Premeasure& xi,
                           const std::vector<double>& radii);

/// nu(B) / (mu(B)^q xi(B)) with 0/0 = 0, c/0 = inf for c > 0, and c/inf = 0.
Extended density_ratio(double nu_mass, Extended term);

struct DensityProfile {
  std::vector<double> radii;        // ascending
  std::vector<Extended> ratios;     // per radius
  Extended upper_density;           // max over the smallest `tail` radii
};

DensityProfile upper_density_profile(const FiniteMetricSpace& space, const PointMeasure& mu,
                                     double q, const Premeasure& xi, const PointMeasure& nu,
                                     PointIndex x, std::vector<double> radii,
                                     std::size_t tail = 3);

struct DensityBoundReport {
  double nu_target = 0.0;  // nu(E)
  Extended s;              // max over candidates of nu(B) / weight_term(B)
  Extended h_value;        // H_delta(E)
  Extended bound;          // s * H_delta(E)
  bool vacuous = false;    // s infinite: the finite-scale bound says nothing
  bool holds = false;
  double slack = 0.0;      // bound - nu(E), when finite
};

/// nu(E) <= s H_delta(E) for the centered cover family at scale delta.
DensityBoundReport density_upper_bound_check(const FiniteMetricSpace& space,
                                             const PointMeasure& mu, double q,
                                             const Premeasure& xi, const PointMeasure& nu,
                                             const std::vector<PointIndex>& target, double delta,
                                             const IntegerSolverOptions& options = {});

/// Same bound on an arbitrary cover instance, given nu of every candidate, nu(E) and the
/// instance's integer optimum.
DensityBoundReport density_bound_from_instance(const CoverInstance& instance,
                                               const std::vector<double>& nu_candidate_mass,
                                               double nu_target, Extended h_value);

}  // namespace mfh
