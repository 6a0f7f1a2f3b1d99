#include "mfh/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace mfh {

namespace {

const char* kind_name(SpaceViolation::Kind kind) {
  using K = SpaceViolation::Kind;
  switch (kind) {
    case K::kEmpty: return "Empty";
    case K::kNonSquare: return "NonSquare";
    case K::kRaggedCoordinates: return "RaggedCoordinates";
    case K::kNonFinite: return "NonFinite";
    case K::kNegativeDistance: return "NegativeDistance";
    case K::kNonzeroDiagonal: return "NonzeroDiagonal";
    case K::kAsymmetricDistance: return "AsymmetricDistance";
    case K::kZeroDistance: return "ZeroDistance";
    case K::kTriangleViolation: return "TriangleViolation";
    case K::kCoordinateMismatch: return "CoordinateMismatch";
    case K::kDuplicateId: return "DuplicateId";
    case K::kNonPositiveEpsilon: return "NonPositiveEpsilon";
    case K::kEpsilonAboveResolution: return "EpsilonAboveResolution";
  }
  return "Unknown";
}

std::string join_violations(const std::vector<SpaceViolation>& v) {
  std::ostringstream os;
  os << "invalid metric space:";
  for (const auto& x : v) os << ' ' << x.describe() << ';';
  return os.str();
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    const double d = a[t] - b[t];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

std::string SpaceViolation::describe() const {
  std::ostringstream os;
  os << kind_name(kind) << '(' << i << ',' << j << ',' << k << ')';
  return os.str();
}

InvalidSpace::InvalidSpace(std::vector<SpaceViolation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

bool InvalidSpace::has(SpaceViolation::Kind kind) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const SpaceViolation& v) { return v.kind == kind; });
}

std::vector<SpaceViolation> check_space(const RawSpace& raw) {
  using K = SpaceViolation::Kind;
  std::vector<SpaceViolation> out;
  auto add = [&out](K kind, std::size_t i = 0, std::size_t j = 0, std::size_t k = 0) {
    out.push_back(SpaceViolation{kind, i, j, k});
  };

  std::size_t n = 0;
  if (raw.dist) {
    n = raw.dist->size();
  } else if (raw.coords) {
    n = raw.coords->size();
  }
  if (n == 0) {
    add(K::kEmpty);
    return out;
  }

  if (!raw.ids.empty()) {
    if (raw.ids.size() != n) add(K::kNonSquare, raw.ids.size(), n);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < raw.ids.size(); ++i) {
      if (!seen.insert(raw.ids[i]).second) add(K::kDuplicateId, i);
    }
  }

  bool coords_ok = false;
  if (raw.coords) {
    const auto& c = *raw.coords;
    coords_ok = c.size() == n && !c.front().empty();
    if (c.size() != n) add(K::kNonSquare, c.size(), n);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].size() != c.front().size() || c[i].empty()) {
        add(K::kRaggedCoordinates, i);
        coords_ok = false;
      }
      for (double v : c[i]) {
        if (!std::isfinite(v)) {
          add(K::kNonFinite, i);
          coords_ok = false;
          break;
        }
      }
    }
  }

  // Working distance matrix: given explicitly, else derived from coordinates.
  std::vector<std::vector<double>> d;
  bool square = true;
  if (raw.dist) {
    d = *raw.dist;
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i].size() != n) {
        add(K::kNonSquare, i);
        square = false;
      }
    }
  } else if (coords_ok) {
    const auto& c = *raw.coords;
    d.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = euclidean(c[i], c[j]);
  } else {
    square = false;
  }

  double min_pos = std::numeric_limits<double>::infinity();
  bool finite = true;
  if (square) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double v = d[i][j];
        if (!std::isfinite(v)) {
          add(K::kNonFinite, i, j);
          finite = false;
          continue;
        }
        if (v < 0.0) add(K::kNegativeDistance, i, j);
        if (i == j) {
          if (v != 0.0) add(K::kNonzeroDiagonal, i, i);
          continue;
        }
        if (i < j) {
          if (std::abs(v - d[j][i]) > kInvariantTolerance) add(K::kAsymmetricDistance, i, j);
          if (v == 0.0) add(K::kZeroDistance, i, j);
        }
        if (v > 0.0) min_pos = std::min(min_pos, v);
      }
    }
    if (raw.dist && coords_ok) {
      const auto& c = *raw.coords;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (std::abs(d[i][j] - euclidean(c[i], c[j])) > kInvariantTolerance)
            add(K::kCoordinateMismatch, i, j);
    }
    // Coordinate-derived distances satisfy the triangle inequality exactly, so the
    // cubic scan only runs for explicitly supplied matrices without coordinates.
    if (finite && raw.dist && !raw.coords) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == k) continue;
            if (d[i][k] > d[i][j] + d[j][k] + kInvariantTolerance)
              add(K::kTriangleViolation, i, j, k);
          }
    }
  }

  if (!(raw.epsilon_net > 0.0)) {
    add(K::kNonPositiveEpsilon);
  } else if (square && raw.epsilon_net > min_pos) {
    add(K::kEpsilonAboveResolution);
  }
  return out;
}

FiniteMetricSpace validate_space(const RawSpace& raw) {
  auto violations = check_space(raw);
  if (!violations.empty()) throw InvalidSpace(std::move(violations));

  FiniteMetricSpace s;
  const std::size_t n = raw.dist ? raw.dist->size() : raw.coords->size();
  if (raw.ids.empty()) {
    s.ids_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.ids_.push_back(std::to_string(i));
  } else {
    s.ids_ = raw.ids;
  }
  s.dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s.dist_[i * n + j] = raw.dist ? (*raw.dist)[i][j]
                                    : euclidean((*raw.coords)[i], (*raw.coords)[j]);
  if (raw.coords) s.coords_ = *raw.coords;
  s.epsilon_net_ = raw.epsilon_net;
  return s;
}

FiniteMetricSpace space_from_matrix(std::vector<std::vector<double>> dist, double epsilon_net,
                                    std::vector<std::string> ids) {
  RawSpace raw;
  raw.ids = std::move(ids);
  raw.dist = std::move(dist);
  raw.epsilon_net = epsilon_net;
  return validate_space(raw);
}

FiniteMetricSpace space_from_coords(std::vector<std::vector<double>> coords,
                                    double epsilon_net, std::vector<std::string> ids) {
  RawSpace raw;
  raw.ids = std::move(ids);
  raw.coords = std::move(coords);
  raw.epsilon_net = epsilon_net;
  return validate_space(raw);
}

std::optional<PointIndex> FiniteMetricSpace::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<PointIndex>(it - ids_.begin());
}

double FiniteMetricSpace::min_positive_distance() const {
  double m = std::numeric_limits<double>::infinity();
  for (double v : dist_)
    if (v > 0.0) m = std::min(m, v);
  return m;
}

std::vector<std::vector<double>> FiniteMetricSpace::distance_matrix() const {
  const std::size_t n = size();
  std::vector<std::vector<double>> out(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = distance(i, j);
  return out;
}

// ---------------------------------------------------------------------------

PointMeasure PointMeasure::from_masses(std::vector<double> masses) {
  if (masses.empty()) throw InvalidMeasure("measure has no points");
  long double total = 0.0L;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!(masses[i] >= 0.0) || !std::isfinite(masses[i])) {
      throw InvalidMeasure("mass of point " + std::to_string(i) + " is not a nonnegative real");
    }
    total += masses[i];
  }
  if (std::abs(static_cast<double>(total) - 1.0) > kInvariantTolerance) {
    throw InvalidMeasure("masses sum to " + format_number(static_cast<double>(total)) +
                         ", expected 1");
  }
  PointMeasure m;
  m.masses_ = std::move(masses);
  return m;
}

PointMeasure PointMeasure::uniform(std::size_t n) {
  if (n == 0) throw InvalidMeasure("measure has no points");
  return from_masses(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double PointMeasure::mass_of(const PointSet& set) const {
  double s = 0.0;
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) s += masses_[i];
  return s;
}

double PointMeasure::mass_of(const std::vector<PointIndex>& points) const {
  double s = 0.0;
  for (auto i : points) s += masses_[i];
  return s;
}

std::vector<PointIndex> PointMeasure::support() const {
  std::vector<PointIndex> out;
  for (std::size_t i = 0; i < masses_.size(); ++i)
    if (masses_[i] > 0.0) out.push_back(i);
  return out;
}

bool PointMeasure::full_support() const {
  return std::all_of(masses_.begin(), masses_.end(), [](double m) { return m > 0.0; });
}

// ---------------------------------------------------------------------------

PointSet ball_members(const FiniteMetricSpace& space, const Ball& ball) {
  if (ball.center >= space.size()) throw UnknownCenter(ball.center);
  PointSet out(space.size());
  for (std::size_t j = 0; j < space.size(); ++j)
    if (space.distance(ball.center, j) <= ball.radius) out.set(j);
  return out;
}

double realized_diameter(const FiniteMetricSpace& space, const PointSet& members) {
  double d = 0.0;
  for (auto i = members.find_first(); i != PointSet::npos; i = members.find_next(i))
    for (auto j = members.find_next(i); j != PointSet::npos; j = members.find_next(j))
      d = std::max(d, space.distance(i, j));
  return d;
}

std::vector<double> radius_grid(const FiniteMetricSpace& space, PointIndex center,
                                double delta) {
  if (center >= space.size()) throw UnknownCenter(center);
  const double eps = space.epsilon_net();
  if (delta < eps) throw DeltaBelowResolution(delta, eps);
  std::vector<double> radii{eps};
  for (std::size_t j = 0; j < space.size(); ++j) {
    const double d = space.distance(center, j);
    if (d > 0.0 && d <= delta && d >= eps) radii.push_back(d);
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

std::vector<Ball> enumerate_centered_balls(const FiniteMetricSpace& space,
                                           const std::vector<PointIndex>& centers,
                                           double delta) {
  if (delta < space.epsilon_net()) throw DeltaBelowResolution(delta, space.epsilon_net());
  std::vector<PointIndex> sorted = centers;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Ball> out;
  for (auto c : sorted)
    for (double r : radius_grid(space, c, delta)) out.push_back(Ball{c, r});
  return out;
}

std::vector<Ball> enumerate_all_balls(const FiniteMetricSpace& space, double delta) {
  std::vector<PointIndex> all(space.size());
  std::iota(all.begin(), all.end(), PointIndex{0});
  return enumerate_centered_balls(space, all, delta);
}

// ---------------------------------------------------------------------------

ProductSpace::ProductSpace(FiniteMetricSpace left, FiniteMetricSpace right)
    : left_(std::move(left)), right_(std::move(right)) {}

double ProductSpace::distance(PointIndex a, PointIndex b) const {
  return std::max(left_.distance(left_of(a), left_of(b)),
                  right_.distance(right_of(a), right_of(b)));
}

double ProductSpace::epsilon_net() const {
  return std::max(left_.epsilon_net(), right_.epsilon_net());
}

FiniteMetricSpace ProductSpace::as_metric_space() const {
  const std::size_t n = size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    ids.push_back("(" + left_.ids()[left_of(a)] + "," + right_.ids()[right_of(a)] + ")");
    for (std::size_t b = 0; b < n; ++b) d[a][b] = distance(a, b);
  }
  // The max metric's resolution is the larger of the two minimum gaps; keep the
  // factor floor only if it stays admissible for the pair space.
  const double eps = std::min(epsilon_net(), std::min(left_.min_positive_distance(),
                                                       right_.min_positive_distance()));
  return space_from_matrix(std::move(d), eps, std::move(ids));
}

ProductSpace product_space(FiniteMetricSpace left, FiniteMetricSpace right) {
  return ProductSpace(std::move(left), std::move(right));
}

PointMeasure product_measure(const PointMeasure& mu, const PointMeasure& nu) {
  std::vector<double> m;
  m.reserve(mu.size() * nu.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j) m.push_back(mu.mass(i) * nu.mass(j));
  return PointMeasure::from_masses(std::move(m));
}

PointSet rectangle_members(const ProductSpace& space, const Rectangle& rect) {
  const PointSet l = ball_members(space.left(), rect.left);
  const PointSet r = ball_members(space.right(), rect.right);
  PointSet out(space.size());
  for (auto i = l.find_first(); i != PointSet::npos; i = l.find_next(i))
    for (auto j = r.find_first(); j != PointSet::npos; j = r.find_next(j))
      out.set(space.pair_index(i, j));
  return out;
}

std::vector<Rectangle> enumerate_centered_rectangles(const ProductSpace& space,
                                                     const std::vector<PointIndex>& left_set,
                                                     const std::vector<PointIndex>& right_set,
                                                     double delta) {
  if (delta < space.epsilon_net()) throw DeltaBelowResolution(delta, space.epsilon_net());
  const auto lb = enumerate_centered_balls(space.left(), left_set, delta);
  const auto rb = enumerate_centered_balls(space.right(), right_set, delta);
  std::vector<Rectangle> out;
  out.reserve(lb.size() * rb.size());
  for (const auto& a : lb)
    for (const auto& b : rb) out.push_back(Rectangle{a, b});
  return out;
}

}  // namespace mfh
