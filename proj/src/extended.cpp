#include "mfh/extended.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace mfh {

Extended::Extended(double v) : v_(v) {
  if (std::isnan(v) || v < 0.0) {
    throw std::domain_error("extended value must be nonnegative, got " + std::to_string(v));
  }
}

Extended& Extended::operator+=(Extended other) {
  v_ += other.v_;
  return *this;
}

Extended operator*(Extended a, Extended b) {
  if (a.is_zero() || b.is_zero()) return Extended::zero();
  Extended r;
  r.v_ = a.v_ * b.v_;
  return r;
}

Extended mass_power(double mass, double q) {
  if (mass < 0.0 || std::isnan(mass)) {
    throw std::domain_error("mass must be nonnegative");
  }
  if (mass == 0.0) return q <= 0.0 ? Extended::infinity() : Extended::zero();
  return Extended(std::pow(mass, q));
}

Extended weight_term(double mass, double q, Extended xi) { return mass_power(mass, q) * xi; }

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_number(Extended v) { return format_number(v.value()); }

}  // namespace mfh
