#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "mfh/covering.hpp"
#include "mfh/diagnostics.hpp"
#include "mfh/harness.hpp"

namespace mfh {

namespace {

std::string fmt(double v) { return format_number(v); }
std::string fmt(Extended v) { return format_number(v); }

/// a <= b + tol in [0, inf].
bool leq(Extended a, Extended b, double tol) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return a.value() <= b.value() + tol;
}

bool close(Extended a, Extended b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a == b;
  return std::abs(a.value() - b.value()) <= tol;
}

std::string where(const std::string& id, double q, double delta) {
  return "instance=" + id + " q=" + fmt(q) + " delta=" + fmt(delta);
}

std::string violation(const std::string& id, double q, double delta, const std::string& relation,
                      const std::string& lhs, const std::string& rhs) {
  return where(id, q, delta) + " " + relation + " lhs=" + lhs + " rhs=" + rhs;
}

/// Runs one case, turning solver errors into violations that name the case.
template <class F>
void guarded(SuiteReport& rep, const std::string& context, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    rep.violations.push_back(context + " error: " + e.what());
  }
}

std::size_t size_or(const SuiteOptions& o, std::size_t fallback) {
  return o.cases == 0 ? fallback : o.cases;
}

// ---------------------------------------------------------------------------

void suite_oracle(const SuiteOptions& o, SuiteReport& rep) {
  const double tol = o.tolerances.solver;
  for (const auto& c : oracle_corpus(o.seed, size_or(o, 200))) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const auto inst = centered_instance(c.instance.space, c.instance.measure, c.q, c.xi,
                                          c.target, c.delta);
      const auto ilp = solve_integer_cover(inst.problem);
      const auto lp = solve_fractional_cover(inst.problem);
      const auto ref = brute_force_oracle(inst.problem);
      rep.checks += 3;
      if (!close(ilp.value, ref.integer, tol))
        rep.violations.push_back(
            violation(c.id, c.q, c.delta, "H == oracle", fmt(ilp.value), fmt(ref.integer)));
      if (!close(lp.value, ref.fractional, tol))
        rep.violations.push_back(
            violation(c.id, c.q, c.delta, "W == oracle", fmt(lp.value), fmt(ref.fractional)));
      if (lp.value.is_finite() && !check_certificate(inst.problem, lp).ok)
        rep.violations.push_back(where(c.id, c.q, c.delta) + " LP certificate rejected");
    });
  }
}

void suite_wh_order(const SuiteOptions& o, SuiteReport& rep) {
  const double tol = o.tolerances.solver;
  std::size_t strict = 0;
  for (const auto& c : general_corpus(o.seed, size_or(o, 500))) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const auto inst = centered_instance(c.instance.space, c.instance.measure, c.q, c.xi,
                                          c.target, c.delta);
      const Extended h = solve_integer_cover(inst.problem).value;
      const Extended w = solve_fractional_cover(inst.problem).value;
      ++rep.checks;
      if (!leq(w, h, tol))
        rep.violations.push_back(violation(c.id, c.q, c.delta, "W <= H", fmt(w), fmt(h)));
      if (h.is_finite() && w.value() < h.value() - tol) ++strict;
    });
  }
  // The 5-cycle under the constant premeasure: every point lies in three of the five
  // radius-1 balls, so W = 5/3 while any integer cover needs two balls.
  const Instance c5 = cycle_metric(5);
  const auto xi = Premeasure::constant_nonempty(1.0);
  const auto all = c5.target_or_all();
  ++rep.cases;
  guarded(rep, where("C5", 0.0, 1.0), [&] {
    const Extended h = hausdorff_premeasure(c5.space, c5.measure, 0.0, xi, all, 1.0).value;
    const Extended w = weighted_premeasure(c5.space, c5.measure, 0.0, xi, all, 1.0).value;
    rep.checks += 3;
    if (!close(h, Extended(2.0), tol))
      rep.violations.push_back(violation("C5", 0.0, 1.0, "H == 2", fmt(h), "2"));
    if (!close(w, Extended(5.0 / 3.0), tol))
      rep.violations.push_back(violation("C5", 0.0, 1.0, "W == 5/3", fmt(w), fmt(5.0 / 3.0)));
    if (!(w < h)) rep.violations.push_back(violation("C5", 0.0, 1.0, "W < H", fmt(w), fmt(h)));
    rep.findings.push_back("C5 gap witness: W=" + fmt(w) + " H=" + fmt(h));
  });
  rep.findings.push_back("strict W < H gaps in corpus: " + std::to_string(strict));
}

void suite_noncentered(const SuiteOptions& o, SuiteReport& rep) {
  const double tol = o.tolerances.solver;
  std::size_t strict = 0;
  for (const auto& c : general_corpus(derive_seed(o.seed, "noncentered"), size_or(o, 200))) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const auto& s = c.instance.space;
      const auto& mu = c.instance.measure;
      const Extended w = weighted_premeasure(s, mu, c.q, c.xi, c.target, c.delta).value;
      const Extended wt = noncentered_weighted_premeasure(s, mu, c.q, c.xi, c.target, c.delta).value;
      ++rep.checks;
      if (!leq(wt, w, tol))
        rep.violations.push_back(violation(c.id, c.q, c.delta, "Wtilde <= W", fmt(wt), fmt(w)));
      if (w.is_finite() && wt.value() < w.value() - tol) ++strict;
    });
  }
  rep.findings.push_back("strict Wtilde < W cases: " + std::to_string(strict));
}

struct FactorValues {
  Extended h_left, w_left, h_right, w_right;
};

FactorValues factor_values(const ProductCase& c) {
  FactorValues v;
  v.h_left = hausdorff_premeasure(c.left.space, c.left.measure, c.q, c.xi_left, c.left_set, c.delta).value;
  v.w_left = weighted_premeasure(c.left.space, c.left.measure, c.q, c.xi_left, c.left_set, c.delta).value;
  v.h_right = hausdorff_premeasure(c.right.space, c.right.measure, c.q, c.xi_right, c.right_set, c.delta).value;
  v.w_right = weighted_premeasure(c.right.space, c.right.measure, c.q, c.xi_right, c.right_set, c.delta).value;
  return v;
}

ProductValues product_values(const ProductCase& c, const Json& spec) {
  const ProductSpace ps(c.left.space, c.right.space);
  const auto xi = rectangle_premeasure_from_json(spec, c.left.measure, c.right.measure);
  return product_premeasure_values(ps, c.left.measure, c.right.measure, c.q, xi, c.left_set,
                                   c.right_set, c.delta);
}

void suite_product_w(const SuiteOptions& o, SuiteReport& rep) {
  const double tol = o.tolerances.check;
  double worst = 0.0;
  for (const auto& c : product_corpus(o.seed, size_or(o, 100))) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const auto f = factor_values(c);
      const Extended w = product_values(c, c.xi_spec).w.value;
      const Extended prod = f.w_left * f.w_right;
      ++rep.checks;
      if (w.is_infinite() || prod.is_infinite()) {
        if (w != prod)
          rep.violations.push_back(violation(c.id, c.q, c.delta, "W(ExF) == W(E)W(F)", fmt(w), fmt(prod)));
        return;
      }
      const double diff = std::abs(w.value() - prod.value());
      const double scale = std::max(1.0, prod.value());
      worst = std::max(worst, diff / scale);
      if (diff > tol * scale)
        rep.violations.push_back(violation(c.id, c.q, c.delta, "W(ExF) == W(E)W(F)", fmt(w), fmt(prod)));
    });
  }
  rep.findings.push_back("max scaled |W(ExF) - W(E)W(F)|: " + fmt(worst));
}

void suite_sandwich(const SuiteOptions& o, SuiteReport& rep) {
  const double tol = o.tolerances.check;
  std::size_t strict_upper = 0;
  for (const auto& c : product_corpus(o.seed, size_or(o, 100))) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const auto f = factor_values(c);
      const Extended h = product_values(c, c.xi_spec).h.value;
      const Extended lower = f.w_left * f.h_right;
      const Extended upper = f.h_left * f.h_right;
      rep.checks += 2;
      if (!leq(lower, h, tol))
        rep.violations.push_back(violation(c.id, c.q, c.delta, "W(E)H(F) <= H(ExF)", fmt(lower), fmt(h)));
      if (!leq(h, upper, tol))
        rep.violations.push_back(violation(c.id, c.q, c.delta, "H(ExF) <= H(E)H(F)", fmt(h), fmt(upper)));
      if (upper.is_finite() && h.value() < upper.value() - tol) ++strict_upper;
    });
  }
  rep.findings.push_back("cases with H(ExF) < H(E)H(F): " + std::to_string(strict_upper));
}

void suite_zero_infinite(const SuiteOptions& o, SuiteReport& rep) {
  for (const auto& c : zero_infinite_corpus(o.seed, size_or(o, 20))) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const auto f = factor_values(c);
      const Extended h = product_values(c, c.xi_spec).h.value;
      rep.checks += 3;
      if (!f.h_left.is_infinite())
        rep.violations.push_back(violation(c.id, c.q, c.delta, "H(E) == inf", fmt(f.h_left), "inf"));
      if (!f.h_right.is_zero())
        rep.violations.push_back(violation(c.id, c.q, c.delta, "H(F) == 0", fmt(f.h_right), "0"));
      if (!h.is_zero())
        rep.violations.push_back(violation(c.id, c.q, c.delta, "H(ExF) == 0", fmt(h), "0"));
    });
  }
}

void suite_hxh(const SuiteOptions& o, SuiteReport& rep) {
  const double tol = o.tolerances.solver;
  for (const auto& c : hxh_corpus(o.seed, size_or(o, 50))) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const Json product{{"kind", "product"},
                         {"left", {{"kind", "hausdorff"}, {"h", c.xi_spec["h"]}, {"diam_mode", "nominal"}}},
                         {"right", {{"kind", "hausdorff"}, {"h", c.xi_spec["h_prime"]}, {"diam_mode", "nominal"}}}};
      const Extended w_hxh = product_values(c, c.xi_spec).w.value;
      const Extended w_0 = product_values(c, product).w.value;
      ++rep.checks;
      if (!leq(w_0, w_hxh, tol))
        rep.violations.push_back(violation(c.id, c.q, c.delta, "W_xi0 <= W_hxh'", fmt(w_0), fmt(w_hxh)));
    });
  }
}

void suite_subadd(const SuiteOptions& o, SuiteReport& rep) {
  const double tol = o.tolerances.solver;
  std::size_t separated = 0;
  for (const auto& c : subadditivity_corpus(o.seed, size_or(o, 100))) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const auto& s = c.instance.space;
      const auto& mu = c.instance.measure;
      std::vector<PointIndex> u = c.e;
      u.insert(u.end(), c.f.begin(), c.f.end());
      const Extended we = weighted_premeasure(s, mu, c.q, c.xi, c.e, c.delta).value;
      const Extended wf = weighted_premeasure(s, mu, c.q, c.xi, c.f, c.delta).value;
      const Extended wu = weighted_premeasure(s, mu, c.q, c.xi, u, c.delta).value;
      const Extended sum = we + wf;
      const double scale = sum.is_finite() ? std::max(1.0, sum.value()) : 1.0;
      ++rep.checks;
      if (!leq(wu, sum, tol * scale))
        rep.violations.push_back(violation(c.id, c.q, c.delta, "W(EuF) <= W(E)+W(F)", fmt(wu), fmt(sum)));
      if (c.separated) {
        ++separated;
        ++rep.checks;
        if (!close(wu, sum, tol * scale))
          rep.violations.push_back(violation(c.id, c.q, c.delta, "W(EuF) == W(E)+W(F) (separated)",
                                             fmt(wu), fmt(sum)));
      }
    });
  }
  rep.findings.push_back("separated pairs: " + std::to_string(separated));
}

void record_density(SuiteReport& rep, const std::string& id, double q, double delta,
                    const DensityBoundReport& d, std::size_t& vacuous) {
  ++rep.checks;
  if (d.vacuous) ++vacuous;
  if (!d.holds)
    rep.violations.push_back(violation(id, q, delta, "nu(E) <= s*H", fmt(d.nu_target), fmt(d.bound)));
}

void density_single(SuiteReport& rep, const std::vector<SingleCase>& cases, std::size_t& vacuous) {
  for (const auto& c : cases) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const auto& mu = c.instance.measure;
      const auto inst = centered_instance(c.instance.space, mu, c.q, c.xi, c.target, c.delta);
      const Extended h = solve_integer_cover(inst.problem).value;
      record_density(rep, c.id, c.q, c.delta,
                     density_bound_from_instance(inst, inst.candidate_mass, mu.mass_of(inst.targets), h),
                     vacuous);
    });
  }
}

void density_product(SuiteReport& rep, const std::vector<ProductCase>& cases, std::size_t& vacuous) {
  for (const auto& c : cases) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const ProductSpace ps(c.left.space, c.right.space);
      const auto xi = rectangle_premeasure_from_json(c.xi_spec, c.left.measure, c.right.measure);
      const auto inst = rectangle_instance(ps, c.left.measure, c.right.measure, c.q, xi,
                                           c.left_set, c.right_set, c.delta);
      const Extended h = solve_integer_cover(inst.problem).value;
      const double nu = c.left.measure.mass_of(c.left_set) * c.right.measure.mass_of(c.right_set);
      record_density(rep, c.id, c.q, c.delta,
                     density_bound_from_instance(inst, inst.candidate_mass, nu, h), vacuous);
    });
  }
}

void suite_density(const SuiteOptions& o, SuiteReport& rep) {
  std::size_t vacuous = 0;
  density_single(rep, oracle_corpus(o.seed, size_or(o, 200)), vacuous);
  density_single(rep, general_corpus(o.seed, size_or(o, 500)), vacuous);
  density_single(rep, general_corpus(derive_seed(o.seed, "noncentered"), size_or(o, 200)), vacuous);
  density_single(rep, doubling_corpus(o.seed, size_or(o, 60)), vacuous);
  density_product(rep, product_corpus(o.seed, size_or(o, 100)), vacuous);
  density_product(rep, hxh_corpus(o.seed, size_or(o, 50)), vacuous);
  density_product(rep, zero_infinite_corpus(o.seed, size_or(o, 20)), vacuous);
  for (const auto& c : subadditivity_corpus(o.seed, size_or(o, 100))) {
    std::vector<PointIndex> u = c.e;
    u.insert(u.end(), c.f.begin(), c.f.end());
    density_single(rep, {SingleCase{c.id, c.instance, u, c.q, c.delta, c.xi_spec, c.xi}}, vacuous);
  }
  rep.findings.push_back("vacuous cases (some ball has nu > 0 at zero cost): " +
                         std::to_string(vacuous));
}

void suite_lemma_8c(const SuiteOptions& o, SuiteReport& rep) {
  const double tol = o.tolerances.solver;
  double worst = 0.0;
  std::size_t vacuous = 0;
  for (const auto& c : doubling_corpus(o.seed, size_or(o, 60))) {
    ++rep.cases;
    guarded(rep, where(c.id, c.q, c.delta), [&] {
      const auto& s = c.instance.space;
      const auto& mu = c.instance.measure;
      const auto inst = centered_instance(s, mu, c.q, c.xi, c.target, c.delta);
      std::vector<Ball> balls;
      for (const auto& cand : inst.candidates) balls.push_back(std::get<Ball>(cand));
      const Extended c3 = three_ball_constant(s, mu, c.q, c.xi, balls);
      const Extended h = solve_integer_cover(inst.problem).value;
      const Extended w = solve_fractional_cover(inst.problem).value;
      if (c3.is_infinite()) {
        ++vacuous;
        rep.findings.push_back(where(c.id, c.q, c.delta) + " C3 infinite; bound vacuous");
        return;
      }
      const Extended bound = Extended(8.0) * c3 * w;
      ++rep.checks;
      if (!leq(h, bound, tol))
        rep.violations.push_back(violation(c.id, c.q, c.delta, "H <= 8*C3*W", fmt(h), fmt(bound)));
      if (h.is_finite() && w.is_finite() && !w.is_zero())
        worst = std::max(worst, h.value() / (c3.value() * w.value()));
    });
  }
  rep.findings.push_back("max H / (C3 W): " + fmt(worst));
  rep.findings.push_back("vacuous (infinite C3): " + std::to_string(vacuous));
}

void suite_vitali(const SuiteOptions& o, SuiteReport& rep) {
  Rng rng(derive_seed(o.seed, "vitali"));
  for (std::size_t i = 0; i < size_or(o, 100); ++i) {
    ++rep.cases;
    const std::size_t d = 1 + i % 2;
    const Instance inst = random_cloud(20, d, rng.next());
    std::vector<Ball> balls;
    for (int k = 0; k < 10; ++k) {
      const PointIndex x = rng.below(inst.space.size());
      balls.push_back(Ball{x, rng.uniform(inst.space.epsilon_net(), 0.4)});
    }
    const std::string id = "vitali-" + std::to_string(i) + ":" + inst.id;
    guarded(rep, id, [&] {
      const auto pack = vitali_5r_packing(inst.space, balls);
      const auto check = check_vitali(inst.space, balls, pack);
      const auto again = vitali_5r_packing(inst.space, balls);
      rep.checks += 2;
      for (const auto& p : check.problems) rep.violations.push_back("instance=" + id + " " + p);
      if (again.chosen != pack.chosen || again.blocker != pack.blocker)
        rep.violations.push_back("instance=" + id + " packing is not deterministic");
    });
  }
}

void suite_besicovitch(const SuiteOptions& o, SuiteReport& rep) {
  Rng rng(derive_seed(o.seed, "besicovitch"));
  std::size_t max_families = 0;
  for (std::size_t i = 0; i < size_or(o, 100); ++i) {
    ++rep.cases;
    const std::size_t d = 1 + i % 2;
    const std::size_t n = 5 + rng.below(26);
    const Instance inst = random_cloud(n, d, rng.next());
    std::vector<PointIndex> centers;
    std::vector<double> radii;
    for (PointIndex x = 0; x < n; ++x) {
      if (!rng.chance(0.7)) continue;
      centers.push_back(x);
      radii.push_back(rng.uniform(0.02, 0.3));
    }
    if (centers.empty()) {
      centers.push_back(0);
      radii.push_back(0.1);
    }
    const std::string id = "besicovitch-" + std::to_string(i) + ":" + inst.id;
    guarded(rep, id, [&] {
      const auto fam = besicovitch_families(inst.space, centers, radii);
      const auto check = check_besicovitch(inst.space, centers, fam);
      const auto again = besicovitch_families(inst.space, centers, radii);
      rep.checks += 2;
      for (const auto& p : check.problems) rep.violations.push_back("instance=" + id + " " + p);
      if (again.families != fam.families)
        rep.violations.push_back("instance=" + id + " families are not deterministic");
      max_families = std::max(max_families, fam.count());
    });
  }
  rep.findings.push_back("max family count: " + std::to_string(max_families));
}

void suite_example_zero(const SuiteOptions& o, SuiteReport& rep) {
  const double tol = o.tolerances.solver;
  const Instance net = cantor_net(8, 1.0 / 3.0, 0.5);
  const auto& s = net.space;
  const auto& mu = net.measure;
  const auto all = net.target_or_all();
  const auto phi = HausdorffFunction::identity();
  const auto xi = Premeasure::measure_power(mu, 1.0, phi, 1.0, 1.0);
  double radius = 0.0;  // E inside B(0, R)
  for (auto x : all) radius = std::max(radius, s.distance(0, x));
  const double big = mu.mass_of(ball_members(s, Ball{0, 2.0 * radius}));

  for (double q : {0.0, 1.0}) {
    Extended prev = Extended::infinity();
    for (int k = 2; k <= 6; ++k) {
      const double delta = std::pow(3.0, -k);
      const std::string id = net.id + "/measure_power(p=1)";
      ++rep.cases;
      guarded(rep, where(id, q, delta), [&] {
        const Extended h = hausdorff_premeasure(s, mu, q, xi, all, delta).value;
        const auto fam = besicovitch_families(s, all, std::vector<double>(all.size(), delta));
        const double gamma = static_cast<double>(fam.count());
        const double bound = phi(delta) * std::pow(gamma, q) * std::pow(big, q + 1.0);
        rep.checks += 2;
        if (!leq(h, Extended(bound), tol))
          rep.violations.push_back(violation(id, q, delta, "H <= phi(delta) gamma^q mu(B(0,2R))^(q+1)",
                                             fmt(h), fmt(bound)));
        if (!leq(h, prev, tol))
          rep.violations.push_back(violation(id, q, delta, "H nonincreasing as delta decreases",
                                             fmt(h), fmt(prev)));
        rep.findings.push_back(where(id, q, delta) + " H=" + fmt(h) + " gamma=" + fmt(gamma) +
                               " bound=" + fmt(bound));
        prev = h;
      });
    }
  }
}

void suite_blanketing(const SuiteOptions&, SuiteReport& rep) {
  const Instance net = cantor_net(6, 1.0 / 3.0, 0.5);
  std::vector<double> grid;
  for (int k = 1; k <= 5; ++k) grid.push_back(std::pow(3.0, -k));
  ++rep.cases;
  guarded(rep, net.id, [&] {
    const double p = blanketing_ratio(net.space, net.measure, 2.0, grid);
    ++rep.checks;
    if (!(p <= 10.0))
      rep.violations.push_back("instance=" + net.id + " P_2(mu) <= 10 lhs=" + fmt(p) + " rhs=10");
    rep.findings.push_back("P_2(mu) over 3^-1..3^-5: " + fmt(p));
  });
}

using SuiteFn = void (*)(const SuiteOptions&, SuiteReport&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"oracle", suite_oracle},           {"wh-order", suite_wh_order},
      {"subadd", suite_subadd},           {"product-w", suite_product_w},
      {"sandwich", suite_sandwich},       {"zero-infinite", suite_zero_infinite},
      {"noncentered", suite_noncentered}, {"hxh", suite_hxh},
      {"density", suite_density},         {"vitali", suite_vitali},
      {"besicovitch", suite_besicovitch}, {"lemma-8c", suite_lemma_8c},
      {"example-zero", suite_example_zero}, {"blanketing", suite_blanketing},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "oracle",  "wh-order", "subadd",  "product-w",   "sandwich", "zero-infinite", "noncentered",
      "hxh",     "density",  "vitali",  "besicovitch", "lemma-8c", "example-zero",  "blanketing"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw SuiteUnknown(name);
  SuiteReport rep;
  rep.name = name;
  const auto start = std::chrono::steady_clock::now();
  it->second(options, rep);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
     << report.cases << " cases, " << report.checks << " checks, "
     << report.violations.size() << " violations)\n";
  for (const auto& v : report.violations) os << "VIOLATION " << v << '\n';
  for (const auto& f : report.findings) os << "finding " << f << '\n';
  return os.str();
}

}  // namespace mfh
