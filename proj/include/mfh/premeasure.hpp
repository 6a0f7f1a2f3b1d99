#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "mfh/extended.hpp"
#include "mfh/metric_space.hpp"

namespace mfh {

/// Nondecreasing h with h(0) = 0 and h(r) > 0 for r > 0, drawn from a fixed catalog.
class HausdorffFunction {
 public:
  struct Power {
    double exponent;
  };
  struct Linear {
    double slope;
  };
  /// Piecewise linear through (0,0) and the breakpoints, constant after the last one.
  struct Table {
    std::vector<std::pair<double, double>> breakpoints;
  };
  struct ConstantAfterZero {
    double value;
  };
  using Kind = std::variant<Power, Linear, Table, ConstantAfterZero>;

  /// r^s, s > 0.
  static HausdorffFunction power(double exponent);
  static HausdorffFunction linear(double slope = 1.0);
  static HausdorffFunction identity() { return linear(1.0); }
  /// Breakpoints must have strictly increasing positive radii and nondecreasing positive values.
  static HausdorffFunction table(std::vector<std::pair<double, double>> breakpoints);
  static HausdorffFunction constant_after_zero(double value);

  double operator()(double r) const;
  const Kind& kind() const { return kind_; }

 private:
  explicit HausdorffFunction(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

enum class DiamMode { kNominal, kRealized };

/// Increasing set function on closed balls with xi(empty) = 0.
class Premeasure {
 public:
  struct Hausdorff {
    HausdorffFunction h;
    DiamMode mode;
  };
  /// xi(B) = b * mu(B)^p * phi(2r); satisfies a*mu^p*phi <= xi <= b*mu^p*phi.
  struct MeasurePower {
    std::vector<double> masses;
    double p;
    HausdorffFunction phi;
    double a;
    double b;
  };
  struct ConstantNonempty {
    double c;
  };
  using Kind = std::variant<Hausdorff, MeasurePower, ConstantNonempty>;

  static Premeasure hausdorff(HausdorffFunction h, DiamMode mode = DiamMode::kNominal);
  static Premeasure measure_power(const PointMeasure& mu, double p, HausdorffFunction phi,
                                  double a, double b);
  static Premeasure constant_nonempty(double c);

  /// xi(ball). Throws UnknownCenter.
  Extended operator()(const FiniteMetricSpace& space, const Ball& ball) const;
  /// Same, with the member set already known.
  Extended evaluate(const FiniteMetricSpace& space, const Ball& ball,
                    const PointSet& members) const;

  const Kind& kind() const { return kind_; }

 private:
  explicit Premeasure(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// Premeasure on ball rectangles of a product space.
class RectanglePremeasure {
 public:
  /// xi0(B x B') = xi(B) * xi'(B') with 0 * inf = 0.
  struct Product {
    Premeasure left;
    Premeasure right;
  };
  /// (h x h')(max(2r, 2r')) with (h x h')(t) = h(t) h'(t).
  struct HxH {
    HausdorffFunction h;
    HausdorffFunction h_prime;
  };
  using Kind = std::variant<Product, HxH>;

  static RectanglePremeasure product(Premeasure left, Premeasure right);
  static RectanglePremeasure hxh(HausdorffFunction h, HausdorffFunction h_prime);

  Extended operator()(const ProductSpace& space, const Rectangle& rect) const;
  Extended evaluate(const ProductSpace& space, const Rectangle& rect,
                    const PointSet& left_members, const PointSet& right_members) const;

  const Kind& kind() const { return kind_; }

 private:
  explicit RectanglePremeasure(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

inline RectanglePremeasure product_premeasure(Premeasure left, Premeasure right) {
  return RectanglePremeasure::product(std::move(left), std::move(right));
}

inline RectanglePremeasure hxh_premeasure(HausdorffFunction h, HausdorffFunction h_prime) {
  return RectanglePremeasure::hxh(std::move(h), std::move(h_prime));
}

}  // namespace mfh
