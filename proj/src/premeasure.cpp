#include "mfh/premeasure.hpp"

#include <cmath>

namespace mfh {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

HausdorffFunction HausdorffFunction::power(double exponent) {
  if (!positive_finite(exponent)) throw InvalidPremeasure("power exponent must be positive");
  return HausdorffFunction(Power{exponent});
}

HausdorffFunction HausdorffFunction::linear(double slope) {
  if (!positive_finite(slope)) throw InvalidPremeasure("linear slope must be positive");
  return HausdorffFunction(Linear{slope});
}

HausdorffFunction HausdorffFunction::table(std::vector<std::pair<double, double>> breakpoints) {
  if (breakpoints.empty()) throw InvalidPremeasure("table needs at least one breakpoint");
  double prev_r = 0.0;
  double prev_v = 0.0;
  for (const auto& [r, v] : breakpoints) {
    if (!positive_finite(r) || r <= prev_r)
      throw InvalidPremeasure("table radii must be positive and strictly increasing");
    if (!positive_finite(v) || v < prev_v)
      throw InvalidPremeasure("table values must be positive and nondecreasing");
    prev_r = r;
    prev_v = v;
  }
  return HausdorffFunction(Table{std::move(breakpoints)});
}

HausdorffFunction HausdorffFunction::constant_after_zero(double value) {
  if (!positive_finite(value)) throw InvalidPremeasure("constant must be positive");
  return HausdorffFunction(ConstantAfterZero{value});
}

double HausdorffFunction::operator()(double r) const {
  if (r <= 0.0) return 0.0;
  return std::visit(
      overloaded{
          [r](const Power& p) { return std::pow(r, p.exponent); },
          [r](const Linear& l) { return l.slope * r; },
          [r](const Table& t) {
            double r0 = 0.0;
            double v0 = 0.0;
            for (const auto& [r1, v1] : t.breakpoints) {
              if (r <= r1) return v0 + (v1 - v0) * (r - r0) / (r1 - r0);
              r0 = r1;
              v0 = v1;
            }
            return v0;
          },
          [](const ConstantAfterZero& c) { return c.value; },
      },
      kind_);
}

// ---------------------------------------------------------------------------

Premeasure Premeasure::hausdorff(HausdorffFunction h, DiamMode mode) {
  return Premeasure(Hausdorff{std::move(h), mode});
}

Premeasure Premeasure::measure_power(const PointMeasure& mu, double p, HausdorffFunction phi,
                                     double a, double b) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw InvalidPremeasure("exponent p must be >= 0");
  if (!(a >= 0.0) || !(b >= a) || !std::isfinite(b))
    throw InvalidPremeasure("measure_power needs 0 <= a <= b < inf");
  return Premeasure(MeasurePower{mu.masses(), p, std::move(phi), a, b});
}

Premeasure Premeasure::constant_nonempty(double c) {
  if (!(c >= 0.0)) throw InvalidPremeasure("constant must be nonnegative");
  return Premeasure(ConstantNonempty{c});
}

Extended Premeasure::operator()(const FiniteMetricSpace& space, const Ball& ball) const {
  return evaluate(space, ball, ball_members(space, ball));
}

Extended Premeasure::evaluate(const FiniteMetricSpace& space, const Ball& ball,
                              const PointSet& members) const {
  if (ball.center >= space.size()) throw UnknownCenter(ball.center);
  if (members.none()) return Extended::zero();
  return std::visit(
      overloaded{
          [&](const Hausdorff& x) {
            const double diam = x.mode == DiamMode::kNominal ? ball.nominal_diameter()
                                                             : realized_diameter(space, members);
            return Extended(x.h(diam));
          },
          [&](const MeasurePower& x) {
            if (x.masses.size() != space.size())
              throw InvalidPremeasure("measure_power measure does not match the space");
            double m = 0.0;
            for (auto i = members.find_first(); i != PointSet::npos; i = members.find_next(i))
              m += x.masses[i];
            // p >= 0, so 0^0 = 1 is the intended limit here.
            return Extended(x.b * std::pow(m, x.p) * x.phi(ball.nominal_diameter()));
          },
          [](const ConstantNonempty& x) { return Extended(x.c); },
      },
      kind_);
}

// ---------------------------------------------------------------------------

RectanglePremeasure RectanglePremeasure::product(Premeasure left, Premeasure right) {
  return RectanglePremeasure(Product{std::move(left), std::move(right)});
}

RectanglePremeasure RectanglePremeasure::hxh(HausdorffFunction h, HausdorffFunction h_prime) {
  return RectanglePremeasure(HxH{std::move(h), std::move(h_prime)});
}

Extended RectanglePremeasure::operator()(const ProductSpace& space,
                                         const Rectangle& rect) const {
  return evaluate(space, rect, ball_members(space.left(), rect.left),
                  ball_members(space.right(), rect.right));
}

Extended RectanglePremeasure::evaluate(const ProductSpace& space, const Rectangle& rect,
                                       const PointSet& left_members,
                                       const PointSet& right_members) const {
  return std::visit(
      overloaded{
          [&](const Product& x) {
            return x.left.evaluate(space.left(), rect.left, left_members) *
                   x.right.evaluate(space.right(), rect.right, right_members);
          },
          [&](const HxH& x) {
            if (left_members.none() || right_members.none()) return Extended::zero();
            const double d = rect.nominal_diameter();
            return Extended(x.h(d) * x.h_prime(d));
          },
      },
      kind_);
}

}  // namespace mfh
