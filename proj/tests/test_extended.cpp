#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "mfh/extended.hpp"

using mfh::Extended;

TEST_CASE("zero times infinity is zero") {
  const Extended inf = Extended::infinity();
  CHECK((Extended(0.0) * inf).is_zero());
  CHECK((inf * Extended(0.0)).is_zero());
  CHECK((Extended(2.0) * inf).is_infinite());
  CHECK((inf * inf).is_infinite());
  CHECK((Extended(0.5) * Extended(0.2)).value() == doctest::Approx(0.1));
}

TEST_CASE("sums and ordering") {
  const Extended inf = Extended::infinity();
  CHECK((Extended(1.0) + inf).is_infinite());
  CHECK((Extended(1.0) + Extended(2.0)).value() == 3.0);
  CHECK(Extended(1.0) < inf);
  CHECK(Extended(0.0) < Extended(1e-300));
  CHECK(inf == Extended(std::numeric_limits<double>::infinity()));
}

TEST_CASE("negative and nan inputs are rejected") {
  CHECK_THROWS_AS(Extended(-1.0), std::domain_error);
  CHECK_THROWS_AS(Extended(std::nan("")), std::domain_error);
}

TEST_CASE("mass_power conventions") {
  CHECK(mfh::mass_power(0.0, -1.0).is_infinite());
  CHECK(mfh::mass_power(0.0, 0.0).is_infinite());
  CHECK(mfh::mass_power(0.0, 0.5).is_zero());
  CHECK(mfh::mass_power(0.25, 0.0).value() == 1.0);
  CHECK(mfh::mass_power(0.25, -1.0).value() == 4.0);
  CHECK(mfh::mass_power(0.25, 0.5).value() == 0.5);
}

TEST_CASE("weight_term") {
  // empty mass at q <= 0 is infinite unless xi vanishes
  CHECK(mfh::weight_term(0.0, -1.0, Extended(0.3)).is_infinite());
  CHECK(mfh::weight_term(0.0, 0.0, Extended(0.0)).is_zero());
  CHECK(mfh::weight_term(0.5, 1.0, Extended(0.2)).value() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(mfh::weight_term(0.0, 1.0, Extended::infinity()).is_zero());
  CHECK(mfh::weight_term(0.5, 1.0, Extended::infinity()).is_infinite());
}

TEST_CASE("format_number round-trips") {
  CHECK(mfh::format_number(0.1) == "0.1");
  CHECK(mfh::format_number(Extended::infinity()) == "inf");
  for (double v : {1.0 / 3.0, 2.0 / 3.0, 1e-300, 0.30000000000000004, 123456789.125}) {
    CHECK(std::stod(mfh::format_number(v)) == v);
  }
}
