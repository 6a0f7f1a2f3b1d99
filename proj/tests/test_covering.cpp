#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "mfh/covering.hpp"
#include "mfh/errors.hpp"
#include "mfh/generators.hpp"

using namespace mfh;

namespace {

FiniteMetricSpace line(std::size_t n, double step = 1.0) {
  std::vector<std::vector<double>> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back({step * static_cast<double>(i)});
  return space_from_coords(c, step / 2);
}

}  // namespace

TEST_CASE("vitali keeps disjoint balls") {
  const auto s = line(10);
  const std::vector<Ball> balls{{0, 1.0}, {5, 1.0}};
  const auto p = vitali_5r_packing(s, balls);
  CHECK(p.chosen == std::vector<std::size_t>{0, 1});
  CHECK(check_vitali(s, balls, p).ok());
}

TEST_CASE("vitali prefers the larger of nested balls") {
  const auto s = line(10, 0.1);
  const std::vector<Ball> balls{{3, 0.2}, {3, 1.0}};
  const auto p = vitali_5r_packing(s, balls);
  CHECK(p.chosen == std::vector<std::size_t>{1});
  CHECK(p.blocker[0] == 1);
  CHECK(check_vitali(s, balls, p).ok());
}

TEST_CASE("vitali on random families") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto s = line(20);
    Rng rng(seed);
    std::vector<Ball> balls;
    for (int i = 0; i < 10; ++i) {
      const auto c = rng.below(20);
      const double r = 0.5 + static_cast<double>(rng.below(4));
      balls.push_back({c, r});
    }
    const auto p = vitali_5r_packing(s, balls);
    const auto check = check_vitali(s, balls, p);
    CHECK(check.ok());
    CHECK(vitali_5r_packing(s, balls).chosen == p.chosen);
  }
}

TEST_CASE("vitali checker catches bad packings") {
  const auto s = line(5);
  const std::vector<Ball> balls{{0, 1.0}, {1, 1.0}};
  VitaliPacking bogus{{0, 1}, {0, 1}};
  const auto check = check_vitali(s, balls, bogus);
  CHECK(!check.disjoint);
  CHECK(!check.ok());
  CHECK(!check.problems.empty());
}

TEST_CASE("besicovitch examples") {
  const auto s = space_from_coords({{0.0}, {5.0}, {10.0}}, 0.5);
  const auto apart = besicovitch_families(s, {0, 1, 2}, {1.0, 1.0, 1.0});
  CHECK(apart.count() == 1);
  CHECK(check_besicovitch(s, {0, 1, 2}, apart).ok());

  const auto dense = space_from_coords({{0.0}, {0.5}, {1.0}, {1.5}, {2.0}}, 0.25);
  const std::vector<PointIndex> all{0, 1, 2, 3, 4};
  const auto fams = besicovitch_families(dense, all, {1, 1, 1, 1, 1});
  CHECK(fams.count() <= 3);
  CHECK(check_besicovitch(dense, all, fams).ok());

  const auto one = besicovitch_families(s, {1}, {2.0});
  CHECK(one.count() == 1);
  CHECK(one.selected.size() == 1);
}

TEST_CASE("besicovitch in the plane is deterministic") {
  const auto cloud = random_cloud(30, 2, 7);
  Rng rng(3);
  std::vector<PointIndex> centers;
  std::vector<double> radii;
  for (PointIndex i = 0; i < 30; ++i) {
    centers.push_back(i);
    radii.push_back(rng.uniform(0.05, 0.3));
  }
  const auto a = besicovitch_families(cloud.space, centers, radii);
  const auto b = besicovitch_families(cloud.space, centers, radii);
  CHECK(check_besicovitch(cloud.space, centers, a).ok());
  CHECK(a.selected == b.selected);
  CHECK(a.families == b.families);
}

TEST_CASE("besicovitch rejects unsupported spaces") {
  const auto c5 = cycle_metric(5);
  CHECK_THROWS_AS(besicovitch_families(c5.space, {0}, {1.0}), DimensionUnsupported);
  const auto cube = space_from_coords({{0, 0, 0}, {1, 0, 0}}, 0.5);
  CHECK_THROWS_AS(besicovitch_families(cube, {0}, {1.0}), DimensionUnsupported);
}

TEST_CASE("3r subfamily of an integer cover of disjoint balls") {
  const auto s = line(4);
  const auto mu = PointMeasure::uniform(4);
  const auto xi = Premeasure::hausdorff(HausdorffFunction::identity());
  const std::vector<Ball> balls{{0, 0.5}, {1, 0.5}, {2, 0.5}, {3, 0.5}};
  const auto r = subfamily_3r_reduction(s, balls, {1, 1, 1, 1}, mu, 1.0, xi, {0, 1, 2, 3});
  CHECK(r.indices.size() == 4);
  CHECK(r.ratio == doctest::Approx(1.0));
}

TEST_CASE("3r subfamily on T2 and C5") {
  const auto t2 = space_from_matrix({{0, 1}, {1, 0}}, 0.1);
  const auto u2 = PointMeasure::uniform(2);
  const auto id = Premeasure::hausdorff(HausdorffFunction::identity());
  const auto r = subfamily_3r_reduction(t2, {{0, 0.1}, {1, 0.1}}, {1, 1}, u2, 1.0, id, {0, 1});
  CHECK(r.indices.size() == 2);
  CHECK(r.ratio == doctest::Approx(1.0));

  const auto c5 = cycle_metric(5);
  const auto one = Premeasure::constant_nonempty(1.0);
  std::vector<Ball> balls;
  for (PointIndex i = 0; i < 5; ++i) balls.push_back({i, 1.0});
  const std::vector<double> w(5, 1.0 / 3.0);
  const std::vector<PointIndex> all{0, 1, 2, 3, 4};
  const auto c = subfamily_3r_reduction(c5.space, balls, w, c5.measure, 0.0, one, all);
  CHECK(c.indices.size() <= 2);
  PointSet covered(5);
  for (auto i : c.indices) covered |= ball_members(c5.space, balls[i].dilated(3.0));
  CHECK(covered.count() == 5);
  CHECK(std::isfinite(c.ratio));
  CHECK(c.weighted_cost.value() == doctest::Approx(5.0 / 3.0));

  CHECK_THROWS_AS(subfamily_3r_reduction(c5.space, balls, std::vector<double>(5, 0.1),
                                         c5.measure, 0.0, one, all),
                  InvalidWeightedCover);
}

TEST_CASE("three ball constant") {
  const auto s = line(9);
  const auto mu = PointMeasure::uniform(9);
  const auto id = Premeasure::hausdorff(HausdorffFunction::identity());
  // nominal identity at q = 0: term(3B) / term(B) = 3
  CHECK(three_ball_constant(s, mu, 0.0, id, {{4, 1.0}, {2, 0.5}}).value() == doctest::Approx(3.0));
  const auto realized = Premeasure::hausdorff(HausdorffFunction::identity(), DiamMode::kRealized);
  CHECK(three_ball_constant(s, mu, 0.0, realized, {{4, 0.5}}).is_infinite());
}
