#include "mfh/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace mfh {

double blanketing_ratio(const FiniteMetricSpace& space, const PointMeasure& mu, double a,
                        const std::vector<double>& radii) {
  if (radii.empty()) throw EmptyGrid();
  if (!(a > 1.0)) throw Error("blanketing factor must exceed 1");
  double best = 0.0;
  for (auto x : mu.support()) {
    for (double r : radii) {
      const double inner = mu.mass_of(ball_members(space, Ball{x, r}));
      const double outer = mu.mass_of(ball_members(space, Ball{x, a * r}));
      best = std::max(best, outer / inner);
    }
  }
  return best;
}

double premeasure_doubling(const FiniteMetricSpace& space, const Premeasure& xi,
                           const std::vector<double>& radii) {
  if (radii.empty()) throw EmptyGrid();
  double best = 0.0;
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (double r : radii) {
      const Ball small{x, r};
      const Extended lo = xi(space, small);
      const Extended hi = xi(space, small.dilated(2.0));
      if (lo.is_zero() || lo.is_infinite())
        throw ZeroDenominator("xi(B(" + space.ids()[x] + ", " + format_number(r) + ")) = " +
                              format_number(lo));
      best = std::max(best, hi.value() / lo.value());
    }
  }
  return best;
}

Extended density_ratio(double nu_mass, Extended term) {
  if (term.is_infinite()) return Extended::zero();
  if (term.is_zero()) return nu_mass > 0.0 ? Extended::infinity() : Extended::zero();
  return Extended(nu_mass / term.value());
}

DensityProfile upper_density_profile(const FiniteMetricSpace& space, const PointMeasure& mu,
                                     double q, const Premeasure& xi, const PointMeasure& nu,
                                     PointIndex x, std::vector<double> radii, std::size_t tail) {
  if (x >= space.size()) throw UnknownCenter(x);
  if (radii.empty()) throw EmptyGrid();
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  DensityProfile out;
  out.radii = radii;
  out.upper_density = Extended::zero();
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const Ball b{x, radii[k]};
    const PointSet m = ball_members(space, b);
    const Extended ratio =
        density_ratio(nu.mass_of(m), weight_term(mu.mass_of(m), q, xi.evaluate(space, b, m)));
    out.ratios.push_back(ratio);
    if (k < tail && ratio > out.upper_density) out.upper_density = ratio;
  }
  return out;
}

DensityBoundReport density_bound_from_instance(const CoverInstance& instance,
                                               const std::vector<double>& nu_candidate_mass,
                                               double nu_target, Extended h_value) {
  DensityBoundReport rep;
  rep.nu_target = nu_target;
  rep.h_value = h_value;
  rep.s = Extended::zero();
  for (std::size_t i = 0; i < instance.problem.num_candidates(); ++i) {
    const Extended r = density_ratio(nu_candidate_mass[i], instance.problem.costs[i]);
    if (r > rep.s) rep.s = r;
  }
  if (instance.targets.empty()) {
    rep.bound = Extended::zero();
    rep.holds = nu_target <= kSolverTolerance;
    return rep;
  }
  if (rep.s.is_infinite()) {
    rep.vacuous = true;
    rep.holds = true;
    rep.bound = Extended::infinity();
    return rep;
  }
  rep.bound = rep.s * h_value;
  rep.holds = rep.bound.is_infinite() || nu_target <= rep.bound.value() + kSolverTolerance;
  rep.slack = rep.bound.is_infinite() ? std::numeric_limits<double>::infinity()
                                      : rep.bound.value() - nu_target;
  return rep;
}

DensityBoundReport density_upper_bound_check(const FiniteMetricSpace& space,
                                             const PointMeasure& mu, double q,
                                             const Premeasure& xi, const PointMeasure& nu,
                                             const std::vector<PointIndex>& target, double delta,
                                             const IntegerSolverOptions& options) {
  if (nu.size() != space.size()) throw InvalidMeasure("nu does not match the space");
  if (target.empty()) {
    DensityBoundReport rep;
    rep.s = Extended::zero();
    rep.h_value = Extended::zero();
    rep.bound = Extended::zero();
    rep.holds = true;
    return rep;
  }
  const CoverInstance inst = centered_instance(space, mu, q, xi, target, delta);
  std::vector<double> nu_mass;
  for (const auto& c : inst.candidates)
    nu_mass.push_back(nu.mass_of(ball_members(space, std::get<Ball>(c))));
  const Extended h = solve_integer_cover(inst.problem, options).value;
  return density_bound_from_instance(inst, nu_mass, nu.mass_of(inst.targets), h);
}

}  // namespace mfh
