#include "mfh/generators.hpp"

#include <cmath>
#include <numeric>

namespace mfh {

std::vector<PointIndex> Instance::target_or_all() const {
  if (target) return *target;
  std::vector<PointIndex> all(space.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  const std::uint64_t bound = n;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % bound);
}

namespace {

double half_min_distance(const std::vector<std::vector<double>>& coords) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < coords[i].size(); ++k) {
        const double d = coords[i][k] - coords[j][k];
        s += d * d;
      }
      best = std::min(best, std::sqrt(s));
    }
  return best / 2.0;
}

void check_dimension(std::size_t d) {
  if (d != 1 && d != 2) throw DimensionUnsupported(d);
}

}  // namespace

Instance cantor_net(int level, double c, double p) {
  if (level > 14) throw LevelTooLarge(level);
  if (level < 0) throw Error("net level must be nonnegative");
  if (!(c > 0.0 && c <= 0.5)) throw Error("contraction ratio must lie in (0, 1/2]");
  if (!(p > 0.0 && p < 1.0)) throw Error("probability must lie in (0, 1)");

  const std::size_t n = std::size_t{1} << level;
  // For c = 1/m the coordinates are integers over m^L; distances are then correctly rounded
  // quotients of exact integers and boundary comparisons stay exact.
  const double inv = 1.0 / c;
  const double m = std::round(inv);
  const bool integral = std::abs(inv - m) < 1e-12 && std::pow(m, level) < 0x1.0p53;

  std::vector<long double> x(n, 0.0L);
  std::vector<std::int64_t> numer(n, 0);
  std::vector<double> mass(n, 1.0);
  std::int64_t scale = 1;
  if (integral)
    for (int k = 0; k < level; ++k) scale *= static_cast<std::int64_t>(m);
  for (std::size_t a = 0; a < n; ++a) {
    long double step = 1.0L - c;
    std::int64_t istep = integral ? (scale / static_cast<std::int64_t>(m)) *
                                        (static_cast<std::int64_t>(m) - 1)
                                  : 0;
    for (int k = level - 1; k >= 0; --k) {
      const bool one = (a >> k) & 1U;
      if (one) {
        x[a] += step;
        numer[a] += istep;
      }
      mass[a] *= one ? (1.0 - p) : p;
      step *= c;
      if (integral) istep /= static_cast<std::int64_t>(m);
    }
  }
  std::vector<std::vector<double>> coords(n), dist(n, std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a) {
    coords[a] = {integral ? static_cast<double>(numer[a]) / static_cast<double>(scale)
                          : static_cast<double>(x[a])};
    for (std::size_t b = 0; b < a; ++b) {
      const double d = integral ? static_cast<double>(numer[a] - numer[b]) /
                                      static_cast<double>(scale)
                                : static_cast<double>(x[a] - x[b]);
      dist[a][b] = dist[b][a] = d;
    }
  }
  RawSpace raw;
  raw.dist = std::move(dist);
  raw.coords = std::move(coords);
  raw.epsilon_net = integral ? 1.0 / static_cast<double>(scale) : std::pow(c, level);
  if (n == 1) raw.epsilon_net = integral ? 1.0 : std::pow(c, level);

  // Digit products sum to one exactly in exact arithmetic; renormalize away the rounding.
  const double total = std::accumulate(mass.begin(), mass.end(), 0.0);
  for (auto& v : mass) v /= total;

  Instance inst;
  inst.id = "cantor_L" + std::to_string(level) + "_c" + format_number(c) + "_p" + format_number(p);
  inst.space = validate_space(raw);
  inst.measure = PointMeasure::from_masses(std::move(mass));
  return inst;
}

Instance cycle_metric(std::size_t n) {
  if (n < 2) throw Error("cycle needs at least 2 points");
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i > j ? i - j : j - i;
      d[i][j] = static_cast<double>(std::min(k, n - k));
    }
  Instance inst;
  inst.id = "cycle_" + std::to_string(n);
  inst.space = space_from_matrix(std::move(d), 0.5);
  inst.measure = PointMeasure::uniform(n);
  return inst;
}

Instance uniform_grid(std::size_t n, std::size_t d) {
  if (n < 2) throw Error("grid needs at least 2 points per axis");
  check_dimension(d);
  std::vector<std::vector<double>> coords;
  const double h = 1.0 / static_cast<double>(n - 1);
  if (d == 1) {
    for (std::size_t i = 0; i < n; ++i) coords.push_back({static_cast<double>(i) * h});
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        coords.push_back({static_cast<double>(i) * h, static_cast<double>(j) * h});
  }
  const double eps = half_min_distance(coords);
  Instance inst;
  inst.id = "grid_" + std::to_string(n) + "_d" + std::to_string(d);
  inst.measure = PointMeasure::uniform(coords.size());
  inst.space = space_from_coords(std::move(coords), eps);
  return inst;
}

Instance random_cloud(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 2) throw Error("cloud needs at least 2 points");
  check_dimension(d);
  Rng rng(seed);
  std::vector<std::vector<double>> coords(n, std::vector<double>(d));
  for (auto& c : coords)
    for (auto& v : c) v = rng.uniform();
  const double eps = half_min_distance(coords);
  if (!(eps > 0.0)) throw Error("random cloud produced coincident points");
  Instance inst;
  inst.id = "cloud_" + std::to_string(n) + "_d" + std::to_string(d) + "_s" + std::to_string(seed);
  inst.space = space_from_coords(std::move(coords), eps);
  inst.measure = PointMeasure::uniform(n);
  return inst;
}

PointMeasure random_measure(std::size_t n, Rng& rng) {
  return random_measure_with_zeros(n, {}, rng);
}

PointMeasure random_measure_with_zeros(std::size_t n, const std::vector<PointIndex>& zeros,
                                       Rng& rng) {
  std::vector<double> m(n);
  for (auto& v : m) v = rng.uniform(0.05, 1.0);
  for (auto z : zeros) {
    if (z >= n) throw UnknownCenter(z);
    m[z] = 0.0;
  }
  const double total = std::accumulate(m.begin(), m.end(), 0.0);
  if (!(total > 0.0)) throw InvalidMeasure("every point was given mass zero");
  for (auto& v : m) v /= total;
  return PointMeasure::from_masses(std::move(m));
}

}  // namespace mfh
