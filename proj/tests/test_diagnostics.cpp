#include <cmath>

#include "doctest.h"
#include "mfh/diagnostics.hpp"
#include "mfh/errors.hpp"
#include "mfh/generators.hpp"

using namespace mfh;

namespace {

const double kS = std::log(2.0) / std::log(3.0);

std::vector<double> third_powers(int from, int to) {
  std::vector<double> r;
  for (int k = from; k <= to; ++k) r.push_back(std::pow(3.0, -k));
  return r;
}

}  // namespace

TEST_CASE("blanketing ratio") {
  const auto t2 = space_from_matrix({{0, 1}, {1, 0}}, 0.1);
  CHECK(blanketing_ratio(t2, PointMeasure::uniform(2), 2.0, {0.1}) == 1.0);
  CHECK(blanketing_ratio(t2, PointMeasure::from_masses({1.0, 0.0}), 2.0, {0.1, 0.6}) == 1.0);
  CHECK_THROWS_AS(blanketing_ratio(t2, PointMeasure::uniform(2), 2.0, {}), EmptyGrid);
  CHECK_THROWS(blanketing_ratio(t2, PointMeasure::uniform(2), 1.0, {0.1}));
}

TEST_CASE("blanketing ratio of the level 6 cantor net is pinned") {
  const auto net = cantor_net(6, 1.0 / 3.0, 0.5);
  const double v = blanketing_ratio(net.space, net.measure, 2.0, third_powers(1, 5));
  CHECK(v == 2.0);
  CHECK(v <= 10.0);
}

TEST_CASE("blanketing ratio ignores relabeling") {
  const auto cloud = random_cloud(9, 2, 11);
  Rng rng(5);
  const auto mu = random_measure(9, rng);
  const std::vector<std::size_t> perm{4, 0, 8, 2, 6, 1, 7, 3, 5};
  std::vector<std::vector<double>> coords(9);
  std::vector<double> masses(9);
  for (std::size_t i = 0; i < 9; ++i) {
    coords[perm[i]] = cloud.space.coords()[i];
    masses[perm[i]] = mu.mass(i);
  }
  const auto shuffled = space_from_coords(coords, cloud.space.epsilon_net());
  const auto mu2 = PointMeasure::from_masses(masses);
  const std::vector<double> grid{0.1, 0.2, 0.4};
  CHECK(blanketing_ratio(cloud.space, mu, 2.0, grid) ==
        doctest::Approx(blanketing_ratio(shuffled, mu2, 2.0, grid)).epsilon(1e-15));
}

TEST_CASE("premeasure doubling constants") {
  const auto net = cantor_net(3, 1.0 / 3.0, 0.5);
  const auto grid = third_powers(1, 3);
  const auto id = Premeasure::hausdorff(HausdorffFunction::identity());
  CHECK(premeasure_doubling(net.space, id, grid) == doctest::Approx(2.0).epsilon(1e-15));
  const auto ps = Premeasure::hausdorff(HausdorffFunction::power(kS));
  CHECK(premeasure_doubling(net.space, ps, grid) ==
        doctest::Approx(1.548562652630243).epsilon(1e-14));
  CHECK(premeasure_doubling(net.space, Premeasure::constant_nonempty(1.0), grid) == 1.0);

  // nominal xi_h does not see the space
  const auto grid_space = uniform_grid(5, 1);
  CHECK(premeasure_doubling(grid_space.space, ps, grid) ==
        doctest::Approx(premeasure_doubling(net.space, ps, grid)).epsilon(1e-15));

  const auto realized = Premeasure::hausdorff(HausdorffFunction::identity(), DiamMode::kRealized);
  CHECK_THROWS_AS(premeasure_doubling(net.space, realized, grid), ZeroDenominator);
  CHECK_THROWS_AS(premeasure_doubling(net.space, id, {}), EmptyGrid);
}

TEST_CASE("density ratio conventions") {
  CHECK(density_ratio(0.5, Extended::infinity()).is_zero());
  CHECK(density_ratio(0.0, Extended::zero()).is_zero());
  CHECK(density_ratio(0.5, Extended::zero()).is_infinite());
  CHECK(density_ratio(0.5, Extended(0.25)).value() == 2.0);
}

TEST_CASE("upper density profile") {
  const auto net = cantor_net(4, 1.0 / 3.0, 0.5);
  const auto one = Premeasure::constant_nonempty(1.0);
  const auto prof =
      upper_density_profile(net.space, net.measure, 1.0, one, net.measure, 0, third_powers(1, 4));
  CHECK(prof.radii.size() == 4);
  CHECK(prof.radii.front() < prof.radii.back());
  for (const auto& r : prof.ratios) CHECK(r.value() == doctest::Approx(1.0));
  CHECK(prof.upper_density.value() == doctest::Approx(1.0));

  // a zero-mass neighbour ball at q <= 0 has an infinite denominator
  const auto s = space_from_coords({{0.0}, {1.0}}, 0.1);
  const auto mu = PointMeasure::from_masses({1.0, 0.0});
  const auto nu = PointMeasure::uniform(2);
  const auto id = Premeasure::hausdorff(HausdorffFunction::identity());
  const auto z = upper_density_profile(s, mu, 0.0, id, nu, 1, {0.1});
  CHECK(z.ratios.front().is_zero());

  const auto ps = Premeasure::hausdorff(HausdorffFunction::power(kS));
  const auto band =
      upper_density_profile(net.space, net.measure, 0.0, ps, net.measure, 5, third_powers(1, 4));
  for (const auto& r : band.ratios) {
    CHECK(r.value() > 0.0);
    CHECK(r.value() < 10.0);
  }
}

TEST_CASE("density bound on T2") {
  const auto s = space_from_matrix({{0, 1}, {1, 0}}, 0.1);
  const auto mu = PointMeasure::uniform(2);
  const auto id = Premeasure::hausdorff(HausdorffFunction::identity());
  const auto rep = density_upper_bound_check(s, mu, 1.0, id, mu, {0, 1}, 0.6);
  CHECK(rep.s.value() == doctest::Approx(5.0));
  CHECK(rep.h_value.value() == doctest::Approx(0.2));
  CHECK(rep.nu_target == 1.0);
  CHECK(rep.holds);
  CHECK(!rep.vacuous);
  CHECK(std::abs(rep.slack) <= 1e-12);

  const auto empty = density_upper_bound_check(s, mu, 1.0, id, mu, {}, 0.6);
  CHECK(empty.holds);
  CHECK(empty.nu_target == 0.0);
}

TEST_CASE("density bound on a cantor net") {
  const auto net = cantor_net(6, 1.0 / 3.0, 0.5);
  const auto ps = Premeasure::hausdorff(HausdorffFunction::power(kS));
  const auto rep = density_upper_bound_check(net.space, net.measure, 0.0, ps, net.measure,
                                             net.target_or_all(), 1.0 / 9.0);
  CHECK(rep.holds);
  CHECK(rep.slack >= -1e-9);
}
