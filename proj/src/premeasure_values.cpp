#include <algorithm>
#include <sstream>

#include "mfh/cover.hpp"

namespace mfh {

namespace {

std::vector<PointIndex> normalized(const std::vector<PointIndex>& set, std::size_t universe) {
  std::vector<PointIndex> out = set;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (auto p : out)
    if (p >= universe) throw UnknownCenter(p);
  return out;
}

CoverInstance ball_instance(const FiniteMetricSpace& space, const PointMeasure& mu, double q,
                            const Premeasure& xi, const std::vector<PointIndex>& target,
                            std::vector<Ball> balls) {
  if (mu.size() != space.size()) throw InvalidMeasure("measure does not match the space");
  CoverInstance inst;
  inst.targets = target;
  std::vector<std::size_t> local(space.size(), space.size());
  for (std::size_t t = 0; t < target.size(); ++t) local[target[t]] = t;
  inst.problem.num_targets = target.size();
  for (const auto& b : balls) {
    const PointSet members = ball_members(space, b);
    PointSet inc(target.size());
    for (auto j = members.find_first(); j != PointSet::npos; j = members.find_next(j))
      if (local[j] < target.size()) inc.set(local[j]);
    const double mass = mu.mass_of(members);
    inst.problem.costs.push_back(weight_term(mass, q, xi.evaluate(space, b, members)));
    inst.problem.incidence.push_back(std::move(inc));
    inst.candidate_mass.push_back(mass);
    inst.candidates.emplace_back(b);
  }
  return inst;
}

}  // namespace

CoverInstance centered_instance(const FiniteMetricSpace& space, const PointMeasure& mu,
                                double q, const Premeasure& xi,
                                const std::vector<PointIndex>& target, double delta) {
  if (delta < space.epsilon_net()) throw DeltaBelowResolution(delta, space.epsilon_net());
  const auto e = normalized(target, space.size());
  return ball_instance(space, mu, q, xi, e, enumerate_centered_balls(space, e, delta));
}

CoverInstance noncentered_instance(const FiniteMetricSpace& space, const PointMeasure& mu,
                                   double q, const Premeasure& xi,
                                   const std::vector<PointIndex>& target, double delta) {
  if (delta < space.epsilon_net()) throw DeltaBelowResolution(delta, space.epsilon_net());
  const auto e = normalized(target, space.size());
  return ball_instance(space, mu, q, xi, e, enumerate_all_balls(space, delta));
}

CoverInstance rectangle_instance(const ProductSpace& space, const PointMeasure& mu_left,
                                 const PointMeasure& mu_right, double q,
                                 const RectanglePremeasure& xi,
                                 const std::vector<PointIndex>& left_set,
                                 const std::vector<PointIndex>& right_set, double delta) {
  if (mu_left.size() != space.left().size() || mu_right.size() != space.right().size())
    throw InvalidMeasure("measures do not match the product factors");
  const auto e = normalized(left_set, space.left().size());
  const auto f = normalized(right_set, space.right().size());
  const auto rects = enumerate_centered_rectangles(space, e, f, delta);

  CoverInstance inst;
  for (auto a : e)
    for (auto b : f) inst.targets.push_back(space.pair_index(a, b));
  inst.problem.num_targets = inst.targets.size();
  std::vector<std::size_t> lpos(space.left().size(), e.size());
  std::vector<std::size_t> rpos(space.right().size(), f.size());
  for (std::size_t i = 0; i < e.size(); ++i) lpos[e[i]] = i;
  for (std::size_t j = 0; j < f.size(); ++j) rpos[f[j]] = j;

  for (const auto& rect : rects) {
    const PointSet lm = ball_members(space.left(), rect.left);
    const PointSet rm = ball_members(space.right(), rect.right);
    PointSet inc(inst.targets.size());
    for (auto a = lm.find_first(); a != PointSet::npos; a = lm.find_next(a)) {
      if (lpos[a] == e.size()) continue;
      for (auto b = rm.find_first(); b != PointSet::npos; b = rm.find_next(b))
        if (rpos[b] < f.size()) inc.set(lpos[a] * f.size() + rpos[b]);
    }
    const double mass = mu_left.mass_of(lm) * mu_right.mass_of(rm);
    inst.problem.costs.push_back(weight_term(mass, q, xi.evaluate(space, rect, lm, rm)));
    inst.problem.incidence.push_back(std::move(inc));
    inst.candidate_mass.push_back(mass);
    inst.candidates.emplace_back(rect);
  }
  return inst;
}

IntegerCoverSolution hausdorff_premeasure(const FiniteMetricSpace& space, const PointMeasure& mu,
                                          double q, const Premeasure& xi,
                                          const std::vector<PointIndex>& target, double delta,
                                          const IntegerSolverOptions& options) {
  if (target.empty()) return IntegerCoverSolution{};
  return solve_integer_cover(centered_instance(space, mu, q, xi, target, delta).problem, options);
}

FractionalCoverSolution weighted_premeasure(const FiniteMetricSpace& space,
                                            const PointMeasure& mu, double q,
                                            const Premeasure& xi,
                                            const std::vector<PointIndex>& target,
                                            double delta) {
  if (target.empty()) return FractionalCoverSolution{};
  return solve_fractional_cover(centered_instance(space, mu, q, xi, target, delta).problem);
}

FractionalCoverSolution noncentered_weighted_premeasure(const FiniteMetricSpace& space,
                                                        const PointMeasure& mu, double q,
                                                        const Premeasure& xi,
                                                        const std::vector<PointIndex>& target,
                                                        double delta) {
  if (target.empty()) return FractionalCoverSolution{};
  return solve_fractional_cover(noncentered_instance(space, mu, q, xi, target, delta).problem);
}

ProductValues product_premeasure_values(const ProductSpace& space, const PointMeasure& mu_left,
                                        const PointMeasure& mu_right, double q,
                                        const RectanglePremeasure& xi,
                                        const std::vector<PointIndex>& left_set,
                                        const std::vector<PointIndex>& right_set, double delta,
                                        const IntegerSolverOptions& options) {
  if (left_set.empty() || right_set.empty()) return ProductValues{};
  const auto inst =
      rectangle_instance(space, mu_left, mu_right, q, xi, left_set, right_set, delta);
  return ProductValues{solve_integer_cover(inst.problem, options),
                       solve_fractional_cover(inst.problem)};
}

DeltaProfile delta_profile(const FiniteMetricSpace& space, const PointMeasure& mu, double q,
                           const Premeasure& xi, const std::vector<PointIndex>& target,
                           const std::vector<double>& deltas) {
  if (!std::is_sorted(deltas.begin(), deltas.end(), std::greater<>()))
    throw Error("delta_profile expects deltas sorted in descending order");
  DeltaProfile profile;
  for (double delta : deltas) {
    DeltaProfileEntry e{delta, hausdorff_premeasure(space, mu, q, xi, target, delta).value,
                        weighted_premeasure(space, mu, q, xi, target, delta).value,
                        noncentered_weighted_premeasure(space, mu, q, xi, target, delta).value};
    if (!profile.entries.empty()) {
      const auto& prev = profile.entries.back();
      // Smaller delta, smaller candidate family, larger infimum.
      auto violates = [](Extended before, Extended now) {
        return before.is_finite() && now.is_finite() && now.value() < before.value() - kSolverTolerance;
      };
      if (violates(prev.h_value, e.h_value) || violates(prev.w_value, e.w_value) ||
          (prev.h_value.is_infinite() && e.h_value.is_finite()) ||
          (prev.w_value.is_infinite() && e.w_value.is_finite())) {
        std::ostringstream os;
        os << "delta profile not monotone between delta " << format_number(prev.delta)
           << " and " << format_number(delta);
        throw Error(os.str());
      }
    }
    profile.entries.push_back(e);
  }
  return profile;
}

}  // namespace mfh
