#include <cmath>

#include "doctest.h"
#include "mfh/errors.hpp"
#include "mfh/premeasure.hpp"

using namespace mfh;

namespace {

const double kS = std::log(2.0) / std::log(3.0);

FiniteMetricSpace t2() { return space_from_matrix({{0, 1}, {1, 0}}, 0.1); }

}  // namespace

TEST_CASE("hausdorff function catalog") {
  CHECK(HausdorffFunction::identity()(0.3) == 0.3);
  CHECK(HausdorffFunction::linear(2.0)(0.3) == 0.6);
  CHECK(HausdorffFunction::power(0.5)(0.25) == 0.5);
  CHECK(HausdorffFunction::power(0.5)(0.0) == 0.0);
  CHECK(HausdorffFunction::constant_after_zero(3.0)(0.0) == 0.0);
  CHECK(HausdorffFunction::constant_after_zero(3.0)(1e-9) == 3.0);

  const auto t = HausdorffFunction::table({{1.0, 2.0}, {2.0, 3.0}});
  CHECK(t(0.5) == 1.0);
  CHECK(t(1.5) == 2.5);
  CHECK(t(9.0) == 3.0);
  CHECK_THROWS_AS(HausdorffFunction::table({{1.0, 2.0}, {1.0, 3.0}}), InvalidPremeasure);
  CHECK_THROWS_AS(HausdorffFunction::table({{1.0, 2.0}, {2.0, 1.0}}), InvalidPremeasure);
  CHECK_THROWS_AS(HausdorffFunction::power(0.0), InvalidPremeasure);
}

TEST_CASE("nominal and realized hausdorff premeasures") {
  const auto s = t2();
  const auto id = Premeasure::hausdorff(HausdorffFunction::identity());
  CHECK(id(s, {0, 0.1}).value() == doctest::Approx(0.2).epsilon(1e-15));

  const auto cantor = Premeasure::hausdorff(HausdorffFunction::power(kS));
  const double v = cantor(s, {0, 1.0 / 3.0}).value();
  CHECK(v == doctest::Approx(0.7742813263151215).epsilon(1e-14));
  CHECK(v == doctest::Approx(std::exp(kS * std::log(2.0 / 3.0))).epsilon(1e-14));

  const auto realized = Premeasure::hausdorff(HausdorffFunction::identity(), DiamMode::kRealized);
  CHECK(realized(s, {0, 0.1}).is_zero());
  CHECK(realized(s, {0, 1.0}).value() == 1.0);
  CHECK_THROWS_AS(id(s, {5, 0.1}), UnknownCenter);
}

TEST_CASE("measure_power and constant premeasures") {
  const auto s = t2();
  const auto mu = PointMeasure::from_masses({0.25, 0.75});
  const auto mp = Premeasure::measure_power(mu, 1.0, HausdorffFunction::identity(), 1.0, 3.0);
  CHECK(mp(s, {0, 0.1}).value() == doctest::Approx(3.0 * 0.25 * 0.2));
  CHECK(mp(s, {0, 1.0}).value() == doctest::Approx(3.0 * 1.0 * 2.0));

  const auto c = Premeasure::constant_nonempty(1.0);
  CHECK(c(s, {0, 0.1}).value() == 1.0);
  CHECK(c(s, {1, 1.0}).value() == 1.0);
}

TEST_CASE("premeasures are monotone along radius") {
  const auto s = space_from_coords({{0.0}, {0.3}, {0.7}, {1.0}}, 0.05);
  const auto mu = PointMeasure::from_masses({0.1, 0.2, 0.3, 0.4});
  const std::vector<Premeasure> xs{
      Premeasure::hausdorff(HausdorffFunction::power(kS)),
      Premeasure::hausdorff(HausdorffFunction::identity(), DiamMode::kRealized),
      Premeasure::measure_power(mu, 0.5, HausdorffFunction::identity(), 1.0, 1.0),
      Premeasure::constant_nonempty(2.0)};
  for (const auto& xi : xs)
    for (PointIndex x = 0; x < s.size(); ++x) {
      const auto g = radius_grid(s, x, 1.0);
      for (std::size_t k = 1; k < g.size(); ++k) CHECK(xi(s, {x, g[k - 1]}) <= xi(s, {x, g[k]}));
    }
}

TEST_CASE("product premeasure on rectangles") {
  const auto s = t2();
  const auto p = product_space(s, s);
  const auto id = Premeasure::hausdorff(HausdorffFunction::identity());
  const auto xi0 = product_premeasure(id, id);
  CHECK(xi0(p, {{0, 0.1}, {1, 0.1}}).value() == doctest::Approx(0.04));
  CHECK(xi0(p, {{0, 0.1}, {1, 0.5}}).value() == doctest::Approx(0.2));

  const auto zero = Premeasure::constant_nonempty(0.0);
  CHECK(product_premeasure(zero, id)(p, {{0, 0.1}, {1, 1.0}}).is_zero());
  CHECK_THROWS_AS(Premeasure::measure_power(PointMeasure::uniform(2), -1.0,
                                            HausdorffFunction::identity(), 1.0, 1.0),
                  InvalidPremeasure);
}

TEST_CASE("h x h' dominates the product premeasure") {
  const auto s = t2();
  const auto p = product_space(s, s);
  const auto id = HausdorffFunction::identity();
  const auto hxh = hxh_premeasure(id, id);
  const auto xi0 = product_premeasure(Premeasure::hausdorff(id), Premeasure::hausdorff(id));
  const Rectangle uneven{{0, 0.1}, {1, 0.5}};
  CHECK(hxh(p, uneven).value() == doctest::Approx(1.0));
  CHECK(xi0(p, uneven).value() == doctest::Approx(0.2));
  const Rectangle even{{0, 0.5}, {1, 0.5}};
  CHECK(hxh(p, even).value() == xi0(p, even).value());
}
