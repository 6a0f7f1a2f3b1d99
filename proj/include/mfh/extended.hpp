#pragma once

#include <compare>
#include <limits>
#include <string>

namespace mfh {

/// A value in [0, +inf].
///
/// Multiplication follows the measure-theoretic convention 0 * inf = inf * 0 = 0,
/// which is what makes products of premeasures and weight terms well defined.
class Extended {
 public:
  constexpr Extended() = default;
  /// Throws std::domain_error for negative or NaN input. +inf maps to infinity().
  explicit Extended(double v);

  static constexpr Extended infinity() {
    Extended e;
    e.v_ = std::numeric_limits<double>::infinity();
    return e;
  }
  static constexpr Extended zero() { return Extended(); }

  bool is_infinite() const { return v_ == std::numeric_limits<double>::infinity(); }
  bool is_finite() const { return !is_infinite(); }
  bool is_zero() const { return v_ == 0.0; }
  /// Raw value; +inf for infinity().
  double value() const { return v_; }

  Extended& operator+=(Extended other);

  friend Extended operator+(Extended a, Extended b) { return a += b; }
  friend Extended operator*(Extended a, Extended b);
  friend std::partial_ordering operator<=>(Extended a, Extended b) { return a.v_ <=> b.v_; }
  friend bool operator==(Extended a, Extended b) { return a.v_ == b.v_; }

 private:
  double v_ = 0.0;
};

/// mass^q with 0^q = inf for q <= 0 and 0^q = 0 for q > 0.
Extended mass_power(double mass, double q);

/// mass^q * xi, the cost of a covering set.
Extended weight_term(double mass, double q, Extended xi);

/// Shortest decimal text that round-trips to the same double; "inf" for infinity.
std::string format_number(double v);
std::string format_number(Extended v);

}  // namespace mfh
