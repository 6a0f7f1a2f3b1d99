#include "mfh/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mfh {

namespace {

std::string ball_text(const FiniteMetricSpace& space, const Ball& b) {
  return "B(" + space.ids()[b.center] + ", " + format_number(b.radius) + ")";
}

}  // namespace

VitaliPacking vitali_5r_packing(const FiniteMetricSpace& space, const std::vector<Ball>& balls) {
  const std::size_t n = balls.size();
  std::vector<PointSet> members;
  members.reserve(n);
  for (const auto& b : balls) members.push_back(ball_members(space, b));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return balls[a].radius > balls[b].radius; });

  VitaliPacking out;
  out.blocker.assign(n, n);
  for (auto i : order) {
    for (auto c : out.chosen) {
      if (members[i].intersects(members[c])) {
        out.blocker[i] = c;
        break;
      }
    }
    if (out.blocker[i] == n) {
      out.chosen.push_back(i);
      out.blocker[i] = i;
    }
  }
  return out;
}

PackingCheck check_vitali(const FiniteMetricSpace& space, const std::vector<Ball>& balls,
                          const VitaliPacking& packing) {
  PackingCheck check;
  check.disjoint = true;
  check.blockers_valid = packing.blocker.size() == balls.size();
  check.covered_by_5r = true;

  std::vector<PointSet> members;
  for (const auto& b : balls) members.push_back(ball_members(space, b));
  for (std::size_t a = 0; a < packing.chosen.size(); ++a) {
    for (std::size_t b = a + 1; b < packing.chosen.size(); ++b) {
      const auto i = packing.chosen[a];
      const auto j = packing.chosen[b];
      if (members[i].intersects(members[j])) {
        check.disjoint = false;
        check.problems.push_back("chosen balls " + ball_text(space, balls[i]) + " and " +
                                 ball_text(space, balls[j]) + " intersect");
      }
    }
  }
  if (!check.blockers_valid) check.problems.push_back("blocker map has the wrong length");
  for (std::size_t i = 0; i < packing.blocker.size() && i < balls.size(); ++i) {
    const auto k = packing.blocker[i];
    const bool is_chosen =
        std::find(packing.chosen.begin(), packing.chosen.end(), k) != packing.chosen.end();
    if (!is_chosen || !members[i].intersects(members[k]) || balls[k].radius < balls[i].radius) {
      check.blockers_valid = false;
      check.problems.push_back("invalid blocker for " + ball_text(space, balls[i]));
    }
  }
  PointSet all(space.size());
  PointSet dilated(space.size());
  for (const auto& m : members) all |= m;
  for (auto c : packing.chosen) dilated |= ball_members(space, balls[c].dilated(5.0));
  if (!all.is_subset_of(dilated)) {
    check.covered_by_5r = false;
    for (auto p : to_indices(all - dilated))
      check.problems.push_back("point " + space.ids()[p] + " outside every 5r dilate");
  }
  return check;
}

BesicovitchFamilies besicovitch_families(const FiniteMetricSpace& space,
                                         const std::vector<PointIndex>& centers,
                                         const std::vector<double>& radii) {
  const std::size_t dim = space.dimension();
  if (dim != 1 && dim != 2) throw DimensionUnsupported(dim);
  if (radii.size() != centers.size()) throw Error("one radius per center is required");
  for (auto c : centers)
    if (c >= space.size()) throw UnknownCenter(c);
  for (double r : radii)
    if (!(r > 0.0) || !std::isfinite(r)) throw Error("radii must be positive and finite");

  std::vector<std::size_t> order(centers.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (radii[a] != radii[b]) return radii[a] > radii[b];
    return centers[a] < centers[b];
  });

  BesicovitchFamilies out;
  for (auto k : order) {
    const auto x = centers[k];
    const bool covered = std::any_of(out.selected.begin(), out.selected.end(), [&](const Ball& b) {
      return space.distance(b.center, x) <= b.radius;
    });
    if (!covered) out.selected.push_back(Ball{x, radii[k]});
  }

  // Closed Euclidean balls meet iff the center distance is at most the radius sum.
  std::vector<std::size_t> color(out.selected.size());
  std::size_t colors = 0;
  for (std::size_t i = 0; i < out.selected.size(); ++i) {
    std::vector<bool> used(colors, false);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = out.selected[i];
      const auto& b = out.selected[j];
      if (space.distance(a.center, b.center) <= a.radius + b.radius) used[color[j]] = true;
    }
    std::size_t c = 0;
    while (c < colors && used[c]) ++c;
    if (c == colors) ++colors;
    color[i] = c;
  }
  out.families.assign(colors, {});
  for (std::size_t i = 0; i < out.selected.size(); ++i)
    out.families[color[i]].push_back(out.selected[i]);
  return out;
}

FamiliesCheck check_besicovitch(const FiniteMetricSpace& space,
                                const std::vector<PointIndex>& centers,
                                const BesicovitchFamilies& result) {
  FamiliesCheck check;
  check.disjoint_within = true;
  check.centers_covered = true;
  for (std::size_t f = 0; f < result.families.size(); ++f) {
    const auto& fam = result.families[f];
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        if (space.distance(fam[i].center, fam[j].center) <= fam[i].radius + fam[j].radius) {
          check.disjoint_within = false;
          check.problems.push_back("family " + std::to_string(f) + ": " +
                                   ball_text(space, fam[i]) + " meets " +
                                   ball_text(space, fam[j]));
        }
      }
    }
  }
  for (auto x : centers) {
    bool hit = false;
    for (const auto& fam : result.families)
      for (const auto& b : fam) hit = hit || space.distance(b.center, x) <= b.radius;
    if (!hit) {
      check.centers_covered = false;
      check.problems.push_back("center " + space.ids()[x] + " is not covered");
    }
  }
  return check;
}

Subfamily3r subfamily_3r_reduction(const FiniteMetricSpace& space, const std::vector<Ball>& balls,
                                   const std::vector<double>& weights, const PointMeasure& mu,
                                   double q, const Premeasure& xi,
                                   const std::vector<PointIndex>& target) {
  if (weights.size() != balls.size()) throw InvalidWeightedCover("one weight per ball is required");
  for (double c : weights)
    if (!(c >= 0.0) || !std::isfinite(c))
      throw InvalidWeightedCover("weights must be finite and nonnegative");
  for (auto x : target)
    if (x >= space.size()) throw UnknownCenter(x);

  const std::size_t n = balls.size();
  std::vector<PointSet> members;
  std::vector<Extended> cost;
  for (const auto& b : balls) {
    members.push_back(ball_members(space, b));
    cost.push_back(weight_term(mu.mass_of(members.back()), q, xi.evaluate(space, b, members.back())));
  }
  const PointSet f = make_point_set(space.size(), target);
  for (auto x : target) {
    double load = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (members[i].test(x)) load += weights[i];
    if (load < 1.0 - 1e-9)
      throw InvalidWeightedCover("point " + space.ids()[x] + " carries weight " +
                                 format_number(load) + " < 1");
  }

  Subfamily3r out;
  out.weighted_cost = Extended::zero();
  for (std::size_t i = 0; i < n; ++i)
    if (weights[i] > 0.0) out.weighted_cost += Extended(weights[i]) * cost[i];

  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < n; ++i)
    if (weights[i] > 0.0 && members[i].intersects(f)) pool.push_back(i);
  auto density = [&](std::size_t i) { return (Extended(weights[i]) * cost[i]).value(); };
  std::sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
    if (balls[a].radius != balls[b].radius) return balls[a].radius > balls[b].radius;
    if (density(a) != density(b)) return density(a) > density(b);
    if (balls[a] != balls[b]) return balls[a] < balls[b];
    return a < b;
  });

  // Each pooled ball meets a selected ball of radius at least its own, so it lies in the
  // selected ball's 3-dilate.
  for (auto i : pool) {
    const bool blocked = std::any_of(out.indices.begin(), out.indices.end(),
                                     [&](std::size_t s) { return members[i].intersects(members[s]); });
    if (!blocked) out.indices.push_back(i);
  }
  PointSet reach(space.size());
  for (auto s : out.indices) reach |= ball_members(space, balls[s].dilated(3.0));
  if (!f.is_subset_of(reach)) throw Error("3r subfamily does not cover the target");

  out.subfamily_cost = Extended::zero();
  for (auto s : out.indices) out.subfamily_cost += cost[s];
  if (out.weighted_cost.is_infinite()) {
    out.ratio = std::numeric_limits<double>::infinity();
  } else if (out.weighted_cost.is_zero()) {
    out.ratio = 0.0;
  } else {
    out.ratio = out.subfamily_cost.value() / out.weighted_cost.value();
  }
  return out;
}

Extended three_ball_constant(const FiniteMetricSpace& space, const PointMeasure& mu, double q,
                             const Premeasure& xi, const std::vector<Ball>& balls) {
  Extended best = Extended::zero();
  for (const auto& b : balls) {
    const PointSet m1 = ball_members(space, b);
    const Ball big = b.dilated(3.0);
    const PointSet m3 = ball_members(space, big);
    const Extended t1 = weight_term(mu.mass_of(m1), q, xi.evaluate(space, b, m1));
    const Extended t3 = weight_term(mu.mass_of(m3), q, xi.evaluate(space, big, m3));
    if ((t1.is_zero() && t3.is_zero()) || (t1.is_infinite() && t3.is_infinite())) continue;
    if (t1.is_zero() || t3.is_infinite()) return Extended::infinity();
    const Extended r(t3.value() / t1.value());
    if (r > best) best = r;
  }
  return best;
}

}  // namespace mfh
