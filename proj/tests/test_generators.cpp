#include <cmath>
#include <numeric>

#include "doctest.h"
#include "mfh/cover.hpp"
#include "mfh/errors.hpp"
#include "mfh/generators.hpp"

using namespace mfh;

TEST_CASE("cantor net level 1") {
  const auto net = cantor_net(1, 1.0 / 3.0, 0.5);
  CHECK(net.space.size() == 2);
  CHECK(net.space.coords()[0][0] == 0.0);
  CHECK(net.space.coords()[1][0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(net.measure.masses() == std::vector<double>{0.5, 0.5});
  CHECK(net.space.epsilon_net() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("cantor net level 2") {
  const auto net = cantor_net(2, 1.0 / 3.0, 0.5);
  const std::vector<double> expect{0.0, 2.0 / 9.0, 2.0 / 3.0, 8.0 / 9.0};
  REQUIRE(net.space.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(net.space.coords()[i][0] == doctest::Approx(expect[i]).epsilon(1e-15));
  CHECK(net.space.distance(1, 2) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));

  const auto biased = cantor_net(2, 1.0 / 3.0, 0.3);
  const std::vector<double> masses{0.09, 0.21, 0.21, 0.49};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(biased.measure.mass(i) == doctest::Approx(masses[i]).epsilon(1e-14));
}

TEST_CASE("cantor net invariants") {
  for (int level : {3, 7, 10}) {
    for (double p : {0.5, 0.2}) {
      const auto net = cantor_net(level, 0.25, p);
      CHECK(net.space.size() == (std::size_t{1} << level));
      const auto& m = net.measure.masses();
      CHECK(std::abs(std::accumulate(m.begin(), m.end(), 0.0) - 1.0) <= 1e-12);
      CHECK(net.measure.full_support());
      CHECK(net.space.epsilon_net() == doctest::Approx(std::pow(0.25, level)));
    }
  }
  const auto generic = cantor_net(5, 0.3, 0.4);
  CHECK(generic.space.epsilon_net() == doctest::Approx(std::pow(0.3, 5)));
  CHECK_THROWS_AS(cantor_net(15, 1.0 / 3.0, 0.5), LevelTooLarge);
}

TEST_CASE("cantor hausdorff profile stays in a factor 4 band") {
  const int level = 6;
  const auto net = cantor_net(level, 1.0 / 3.0, 0.5);
  const auto xi = Premeasure::hausdorff(HausdorffFunction::power(std::log(2.0) / std::log(3.0)));
  std::vector<double> deltas;
  for (int k = 1; k <= level - 1; ++k) deltas.push_back(std::pow(3.0, -k));
  const auto prof = delta_profile(net.space, net.measure, 0.0, xi, net.target_or_all(), deltas);
  double lo = INFINITY, hi = 0.0;
  for (const auto& e : prof.entries) {
    lo = std::min(lo, e.h_value.value());
    hi = std::max(hi, e.h_value.value());
  }
  CHECK(lo > 0.0);
  CHECK(hi <= 4.0 * lo);
}

TEST_CASE("cycle metric") {
  const auto c5 = cycle_metric(5);
  CHECK(c5.space.distance(0, 2) == 2.0);
  CHECK(c5.space.distance(0, 3) == 2.0);
  CHECK(c5.space.distance(0, 4) == 1.0);
  CHECK(c5.space.epsilon_net() == 0.5);
  CHECK(!c5.space.has_coords());
}

TEST_CASE("uniform grid") {
  const auto g = uniform_grid(3, 1);
  CHECK(g.space.coords() == std::vector<std::vector<double>>{{0.0}, {0.5}, {1.0}});
  CHECK(g.space.epsilon_net() == 0.25);
  const auto sq = uniform_grid(3, 2);
  CHECK(sq.space.size() == 9);
  CHECK(sq.space.distance(0, 8) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("random cloud is reproducible") {
  const auto a = random_cloud(6, 2, 7);
  const auto b = random_cloud(6, 2, 7);
  CHECK(a.space.distance_matrix() == b.space.distance_matrix());
  const auto c = random_cloud(6, 2, 8);
  CHECK(a.space.distance_matrix() != c.space.distance_matrix());
  CHECK(a.space.epsilon_net() == doctest::Approx(a.space.min_positive_distance() / 2));
}

TEST_CASE("rng conversions are pinned") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == b.uniform());
    CHECK(a.below(7) == b.below(7));
  }
}

TEST_CASE("random measures") {
  Rng rng(3);
  const auto m = random_measure(10, rng);
  CHECK(m.full_support());
  const auto z = random_measure_with_zeros(10, {2, 5}, rng);
  CHECK(z.mass(2) == 0.0);
  CHECK(z.mass(5) == 0.0);
  CHECK(z.support().size() == 8);
}
