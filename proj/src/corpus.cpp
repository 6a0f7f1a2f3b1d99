#include <algorithm>
#include <cmath>
#include <numeric>

#include "mfh/harness.hpp"

namespace mfh {

namespace {

const double kCantorDim = std::log(2.0) / std::log(3.0);

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[rng.below(v.size())];
}

std::vector<PointIndex> random_subset(Rng& rng, std::size_t n, double p) {
  std::vector<PointIndex> out;
  for (PointIndex i = 0; i < n; ++i)
    if (rng.chance(p)) out.push_back(i);
  if (out.empty()) out.push_back(rng.below(n));
  return out;
}

/// Distinct realized distances and epsilon_net, those >= floor, ascending.
std::vector<double> radii_at_least(const FiniteMetricSpace& space, double floor) {
  std::vector<double> r{space.epsilon_net()};
  for (PointIndex i = 0; i < space.size(); ++i)
    for (PointIndex j = i + 1; j < space.size(); ++j) r.push_back(space.distance(i, j));
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  r.erase(std::remove_if(r.begin(), r.end(), [floor](double x) { return x < floor; }), r.end());
  return r;
}

Json hausdorff_spec(const Json& h, const char* mode = "nominal") {
  return Json{{"kind", "hausdorff"}, {"h", h}, {"diam_mode", mode}};
}

/// Premeasures whose values are finite and positive on every nonempty ball.
std::vector<Json> positive_specs() {
  return {
      hausdorff_spec("identity"),
      hausdorff_spec(Json{{"power", 0.5}}),
      hausdorff_spec(Json{{"power", kCantorDim}}),
      hausdorff_spec(Json{{"constant_after_zero", 1.0}}),
      Json{{"kind", "constant_nonempty"}, {"c", 1.0}},
      Json{{"kind", "measure_power"}, {"p", 1.0}, {"phi", "identity"}, {"a", 1.0}, {"b", 1.0}},
  };
}

std::vector<Json> all_specs() {
  auto v = positive_specs();
  v.push_back(hausdorff_spec(Json{{"power", kCantorDim}}, "realized"));
  return v;
}

/// A grid radius, drawn from the upper half of the grid half of the time.
double pick_delta(Rng& rng, const std::vector<double>& grid) {
  if (grid.size() > 1 && rng.chance(0.5)) return grid[grid.size() / 2 + rng.below(grid.size() - grid.size() / 2)];
  return grid[rng.below(grid.size())];
}

const std::vector<double> kQGrid{-1.0, 0.0, 0.5, 1.0, 2.0};

/// A small random instance from one of the generators, selected by `kind`.
Instance small_instance(Rng& rng, std::size_t kind, std::size_t max_points) {
  max_points = std::max<std::size_t>(max_points, 3);
  auto n_between = [&](std::size_t lo, std::size_t hi) {
    hi = std::min(hi, max_points);
    return lo + rng.below(hi - lo + 1);
  };
  switch (kind % 4) {
    case 0:
      return cycle_metric(n_between(3, 10));
    case 1:
      if (max_points >= 4 && rng.chance(0.3)) return uniform_grid(2, 2);
      return uniform_grid(n_between(2, 10), 1);
    case 2: {
      const std::size_t n = n_between(3, 10);
      const std::size_t d = 1 + rng.below(2);
      return random_cloud(n, d, rng.next());
    }
    default: {
      const int level = max_points >= 8 ? 1 + static_cast<int>(rng.below(3))
                                        : (max_points >= 4 ? 1 + static_cast<int>(rng.below(2)) : 1);
      const double c = pick(rng, std::vector<double>{1.0 / 3.0, 0.25, 0.4});
      return cantor_net(level, c, rng.uniform(0.2, 0.8));
    }
  }
}

/// Replaces the measure: kept (0), random positive (1), or random with one zero-mass point (2).
void randomize_measure(Instance& inst, Rng& rng, std::size_t mode) {
  const std::size_t n = inst.space.size();
  if (mode == 1) {
    inst.measure = random_measure(n, rng);
  } else if (mode == 2 && n >= 2) {
    inst.measure = random_measure_with_zeros(n, {rng.below(n)}, rng);
  }
}

std::string case_id(const std::string& corpus, std::size_t i, const Instance& inst) {
  return corpus + "-" + std::to_string(i) + ":" + inst.id;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  // splitmix64 over the seed mixed with an FNV-1a hash of the tag.
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed + h + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<SingleCase> general_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(derive_seed(seed, "general"));
  const auto specs = all_specs();
  std::vector<SingleCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    Instance inst = small_instance(rng, i, 10);
    randomize_measure(inst, rng, rng.below(3));
    const auto target = random_subset(rng, inst.space.size(), 0.7);
    const double q = kQGrid[i % kQGrid.size()];
    const double delta = pick_delta(rng, radii_at_least(inst.space, inst.space.epsilon_net()));
    const Json spec = pick(rng, specs);
    Premeasure xi = premeasure_from_json(spec, inst.measure);
    std::string id = case_id("general", i, inst);
    out.push_back(SingleCase{std::move(id), std::move(inst), target, q, delta, spec, std::move(xi)});
  }
  return out;
}

std::vector<SingleCase> oracle_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(derive_seed(seed, "oracle"));
  const auto specs = all_specs();
  const std::vector<double> qs{-1.0, 0.0, 1.0};
  std::vector<SingleCase> out;
  std::size_t attempt = 0;
  while (out.size() < count) {
    ++attempt;
    Instance inst = small_instance(rng, attempt, 7);
    if (inst.space.size() > 7) continue;
    randomize_measure(inst, rng, rng.below(3));
    const auto target = random_subset(rng, inst.space.size(), 0.6);
    const double delta = pick(rng, radii_at_least(inst.space, inst.space.epsilon_net()));
    std::size_t candidates = 0;
    for (auto x : target) candidates += radius_grid(inst.space, x, delta).size();
    if (candidates > 14 || target.size() > 10) continue;
    const double q = qs[out.size() % qs.size()];
    const Json spec = pick(rng, specs);
    Premeasure xi = premeasure_from_json(spec, inst.measure);
    std::string id = case_id("oracle", out.size(), inst);
    out.push_back(SingleCase{std::move(id), std::move(inst), target, q, delta, spec, std::move(xi)});
  }
  return out;
}

std::vector<SingleCase> doubling_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(derive_seed(seed, "doubling"));
  const std::vector<Json> hs{"identity", Json{{"power", 0.5}}, Json{{"power", kCantorDim}}};
  std::vector<SingleCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    Instance inst = [&] {
      switch (i % 3) {
        case 0: {
          const int level = 2 + static_cast<int>(rng.below(3));
          const double c = rng.chance(0.5) ? 1.0 / 3.0 : 0.25;
          return cantor_net(level, c, rng.uniform(0.3, 0.7));
        }
        case 1:
          return uniform_grid(3 + rng.below(6), 1);
        default:
          return uniform_grid(2 + rng.below(2), 2);
      }
    }();
    const auto target = rng.chance(0.5) ? inst.target_or_all()
                                        : random_subset(rng, inst.space.size(), 0.6);
    const double q = kQGrid[i % kQGrid.size()];
    const double delta = pick(rng, radii_at_least(inst.space, inst.space.epsilon_net()));
    const Json spec = hausdorff_spec(pick(rng, hs));
    Premeasure xi = premeasure_from_json(spec, inst.measure);
    std::string id = case_id("doubling", i, inst);
    out.push_back(SingleCase{std::move(id), std::move(inst), target, q, delta, spec, std::move(xi)});
  }
  return out;
}

namespace {

ProductCase make_product_case(Rng& rng, const std::string& corpus, std::size_t i, bool hxh) {
  Instance left = small_instance(rng, rng.below(4), 6);
  Instance right = small_instance(rng, rng.below(4), 6);
  left.measure = random_measure(left.space.size(), rng);
  right.measure = random_measure(right.space.size(), rng);
  const double floor = std::max(left.space.epsilon_net(), right.space.epsilon_net());
  auto grid = radii_at_least(left.space, floor);
  const auto rgrid = radii_at_least(right.space, floor);
  grid.insert(grid.end(), rgrid.begin(), rgrid.end());
  grid.push_back(floor);
  std::sort(grid.begin(), grid.end());
  const double delta = pick_delta(rng, grid);
  const auto e = random_subset(rng, left.space.size(), 0.6);
  const auto f = random_subset(rng, right.space.size(), 0.6);
  const double q = kQGrid[i % kQGrid.size()];

  Json spec_l, spec_r, spec;
  if (hxh) {
    const std::vector<Json> hs{"identity", Json{{"power", 0.5}}, Json{{"power", kCantorDim}}};
    const Json h = pick(rng, hs);
    const Json hp = pick(rng, hs);
    spec_l = hausdorff_spec(h);
    spec_r = hausdorff_spec(hp);
    spec = Json{{"kind", "hxh"}, {"h", h}, {"h_prime", hp}};
  } else {
    const auto specs = positive_specs();
    spec_l = pick(rng, specs);
    spec_r = pick(rng, specs);
    spec = Json{{"kind", "product"}, {"left", spec_l}, {"right", spec_r}};
  }
  Premeasure xl = premeasure_from_json(spec_l, left.measure);
  Premeasure xr = premeasure_from_json(spec_r, right.measure);
  std::string id = corpus + "-" + std::to_string(i) + ":" + left.id + "x" + right.id;
  return ProductCase{std::move(id), std::move(left), std::move(right), e, f, q, delta, spec,
                     std::move(xl), std::move(xr)};
}

}  // namespace

std::vector<ProductCase> product_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(derive_seed(seed, "product"));
  std::vector<ProductCase> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_product_case(rng, "product", i, false));
  return out;
}

std::vector<ProductCase> hxh_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(derive_seed(seed, "hxh"));
  std::vector<ProductCase> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_product_case(rng, "hxh", i, true));
  return out;
}

std::vector<ProductCase> zero_infinite_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(derive_seed(seed, "zero-infinite"));
  // measure_power vanishes on zero-mass balls, which would make those balls free.
  auto specs = positive_specs();
  specs.pop_back();
  std::vector<ProductCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    // A cluster in [0, 0.3] and an isolated point at 1, which gets mass zero.
    const std::size_t k = 2 + rng.below(3);
    std::vector<std::vector<double>> coords;
    for (std::size_t j = 0; j < k; ++j) coords.push_back({rng.uniform(0.0, 0.3)});
    coords.push_back({1.0});
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < coords.size(); ++a)
      for (std::size_t b = a + 1; b < coords.size(); ++b)
        min_gap = std::min(min_gap, std::abs(coords[a][0] - coords[b][0]));
    Instance left;
    left.id = "isolated_" + std::to_string(k + 1);
    left.space = space_from_coords(coords, min_gap / 2.0);
    const PointIndex z = k;
    left.measure = random_measure_with_zeros(k + 1, {z}, rng);

    Instance right = small_instance(rng, 1 + rng.below(3), 6);
    if (rng.chance(0.5)) right.measure = random_measure(right.space.size(), rng);

    auto e = random_subset(rng, k, 0.5);
    e.push_back(z);
    const auto f = random_subset(rng, right.space.size(), 0.6);
    const double floor = std::max(left.space.epsilon_net(), right.space.epsilon_net());
    auto grid = radii_at_least(left.space, floor);
    grid.push_back(floor);
    grid.erase(std::remove_if(grid.begin(), grid.end(), [](double r) { return r >= 0.6; }),
               grid.end());
    const double delta = pick(rng, grid);
    const double q = rng.chance(0.5) ? -1.0 : 0.0;

    const Json spec_l = pick(rng, specs);
    const Json spec_r{{"kind", "constant_nonempty"}, {"c", 0.0}};
    Premeasure xl = premeasure_from_json(spec_l, left.measure);
    Premeasure xr = premeasure_from_json(spec_r, right.measure);
    std::string id = "zero-infinite-" + std::to_string(i) + ":" + left.id + "x" + right.id;
    out.push_back(ProductCase{std::move(id), std::move(left), std::move(right), e, f, q, delta,
                              Json{{"kind", "product"}, {"left", spec_l}, {"right", spec_r}},
                              std::move(xl), std::move(xr)});
  }
  return out;
}

std::vector<PairCase> subadditivity_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(derive_seed(seed, "subadd"));
  const auto specs = all_specs();
  std::vector<PairCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double q = kQGrid[i % kQGrid.size()];
    if (i % 2 == 0) {
      // Left and right first-level cylinders of a Cantor net are 1 - 2c apart.
      const double c = rng.chance(0.5) ? 1.0 / 3.0 : 0.25;
      const int level = 2 + static_cast<int>(rng.below(3));
      Instance inst = cantor_net(level, c, rng.uniform(0.2, 0.8));
      const std::size_t half = inst.space.size() / 2;
      std::vector<PointIndex> e, f;
      for (auto x : random_subset(rng, half, 0.6)) e.push_back(x);
      for (auto x : random_subset(rng, half, 0.6)) f.push_back(half + x);
      double gap = std::numeric_limits<double>::infinity();
      for (auto a : e)
        for (auto b : f) gap = std::min(gap, inst.space.distance(a, b));
      auto grid = radii_at_least(inst.space, inst.space.epsilon_net());
      grid.erase(std::remove_if(grid.begin(), grid.end(), [gap](double r) { return 2.0 * r >= gap; }),
                 grid.end());
      const double delta = pick(rng, grid);
      const Json spec = pick(rng, specs);
      Premeasure xi = premeasure_from_json(spec, inst.measure);
      std::string id = case_id("subadd", i, inst);
      out.push_back(PairCase{std::move(id), std::move(inst), e, f, q, delta, true, spec, std::move(xi)});
    } else {
      Instance inst = small_instance(rng, rng.below(4), 8);
      randomize_measure(inst, rng, rng.below(3));
      const auto e = random_subset(rng, inst.space.size(), 0.5);
      const auto f = random_subset(rng, inst.space.size(), 0.5);
      const double delta = pick(rng, radii_at_least(inst.space, inst.space.epsilon_net()));
      double gap = std::numeric_limits<double>::infinity();
      for (auto a : e)
        for (auto b : f) gap = std::min(gap, inst.space.distance(a, b));
      const Json spec = pick(rng, specs);
      Premeasure xi = premeasure_from_json(spec, inst.measure);
      std::string id = case_id("subadd", i, inst);
      out.push_back(PairCase{std::move(id), std::move(inst), e, f, q, delta, gap > 2.0 * delta,
                             spec, std::move(xi)});
    }
  }
  return out;
}

}  // namespace mfh
