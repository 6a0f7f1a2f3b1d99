#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "mfh/cover.hpp"

namespace mfh {

namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr double kFeasibilityTolerance = 1e-12;

// Dense dual simplex on  min c.x  s.t.  -A x + s = -1,  x, s >= 0.
// The slack basis is dual feasible because c >= 0.
class DualSimplex {
 public:
  DualSimplex(std::size_t rows, std::size_t cols, const std::vector<std::vector<std::size_t>>& col_rows,
              const std::vector<double>& costs)
      : m_(rows), n_(cols), width_(cols + rows), t_(rows * (cols + rows), 0.0),
        rhs_(rows, -1.0), d_(cols + rows, 0.0), basis_(rows), is_basic_(cols + rows, 0) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (auto r : col_rows[j]) at(r, j) = -1.0;
      d_[j] = costs[j];
    }
    for (std::size_t r = 0; r < m_; ++r) {
      at(r, n_ + r) = 1.0;
      basis_[r] = n_ + r;
      is_basic_[n_ + r] = 1;
    }
  }

  // Returns false when some row has no admissible entering column (primal infeasible).
  bool solve(std::uint64_t* iterations) {
    const std::uint64_t bland_after = 20 * (m_ + n_) + 100;
    const std::uint64_t hard_limit = 400 * (m_ + n_) + 10000;
    std::uint64_t it = 0;
    for (;; ++it) {
      if (it > hard_limit) break;
      const bool bland = it > bland_after;
      std::optional<std::size_t> leave;
      for (std::size_t r = 0; r < m_; ++r) {
        if (rhs_[r] >= -kFeasibilityTolerance) continue;
        if (!leave) {
          leave = r;
        } else if (bland ? basis_[r] < basis_[*leave] : rhs_[r] < rhs_[*leave]) {
          leave = r;
        }
      }
      if (!leave) break;
      const std::size_t r = *leave;
      std::optional<std::size_t> enter;
      double best_ratio = std::numeric_limits<double>::infinity();
      double best_mag = 0.0;
      for (std::size_t j = 0; j < width_; ++j) {
        if (is_basic_[j]) continue;
        const double a = at(r, j);
        if (a >= -kPivotTolerance) continue;
        const double ratio = std::max(0.0, d_[j]) / -a;
        if (!enter || ratio < best_ratio - 1e-14) {
          enter = j;
          best_ratio = ratio;
          best_mag = -a;
        } else if (ratio <= best_ratio + 1e-14 && !bland && -a > best_mag) {
          enter = j;
          best_ratio = std::min(best_ratio, ratio);
          best_mag = -a;
        }
      }
      if (!enter) {
        *iterations = it;
        return false;
      }
      pivot(r, *enter);
    }
    *iterations = it;
    return true;
  }

  const std::vector<std::size_t>& basis() const { return basis_; }
  double rhs(std::size_t r) const { return rhs_[r]; }
  double reduced_cost(std::size_t j) const { return d_[j]; }

 private:
  double& at(std::size_t r, std::size_t j) { return t_[r * width_ + j]; }

  void pivot(std::size_t r, std::size_t e) {
    const double p = at(r, e);
    double* row = &t_[r * width_];
    for (std::size_t j = 0; j < width_; ++j) row[j] /= p;
    rhs_[r] /= p;
    row[e] = 1.0;
    for (std::size_t k = 0; k < m_; ++k) {
      if (k == r) continue;
      double* other = &t_[k * width_];
      const double f = other[e];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) other[j] -= f * row[j];
      other[e] = 0.0;
      rhs_[k] -= f * rhs_[r];
    }
    const double f = d_[e];
    if (f != 0.0) {
      for (std::size_t j = 0; j < width_; ++j) d_[j] -= f * row[j];
    }
    d_[e] = 0.0;
    is_basic_[basis_[r]] = 0;
    basis_[r] = e;
    is_basic_[e] = 1;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<double> t_;
  std::vector<double> rhs_;
  std::vector<double> d_;
  std::vector<std::size_t> basis_;
  std::vector<std::uint8_t> is_basic_;
};

// Solves M z = b (transpose = false) or M^T z = b by Gaussian elimination with partial
// pivoting. Returns nullopt when M is numerically singular.
std::optional<std::vector<long double>> dense_solve(std::vector<long double> mat, std::size_t n,
                                                    std::vector<long double> b, bool transpose) {
  if (transpose) {
    std::vector<long double> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[j * n + i] = mat[i * n + j];
    mat.swap(t);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(mat[r * n + col]) > std::abs(mat[piv * n + col])) piv = r;
    if (std::abs(mat[piv * n + col]) < 1e-14L) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(mat[col * n + j], mat[piv * n + j]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const long double f = mat[r * n + col] / mat[col * n + col];
      if (f == 0.0L) continue;
      for (std::size_t j = col; j < n; ++j) mat[r * n + j] -= f * mat[col * n + j];
      b[r] -= f * b[col];
    }
  }
  std::vector<long double> z(n);
  for (std::size_t i = n; i-- > 0;) {
    long double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= mat[i * n + j] * z[j];
    z[i] = s / mat[i * n + i];
  }
  return z;
}

}  // namespace

CertificateCheck check_certificate(const CoverProblem& problem,
                                   const FractionalCoverSolution& solution) {
  CertificateCheck chk;
  const std::size_t m = problem.num_targets;
  if (solution.status == CoverStatus::kInfeasibleInfinite) {
    chk.ok = solution.value.is_infinite();
    return chk;
  }
  std::vector<long double> coverage(m, 0.0L);
  long double primal = 0.0L;
  bool weights_ok = solution.weights.size() == problem.num_candidates();
  for (std::size_t i = 0; weights_ok && i < problem.num_candidates(); ++i) {
    const double c = solution.weights[i];
    if (c < 0.0 || (c > 0.0 && problem.costs[i].is_infinite())) weights_ok = false;
    if (c == 0.0) continue;
    primal += static_cast<long double>(c) * problem.costs[i].value();
    const auto& inc = problem.incidence[i];
    for (auto t = inc.find_first(); t != PointSet::npos; t = inc.find_next(t)) coverage[t] += c;
  }
  chk.min_coverage = m == 0 ? 1.0 : static_cast<double>(*std::min_element(coverage.begin(), coverage.end()));

  long double dual = 0.0L;
  chk.min_dual = 0.0;
  const bool dual_sized = solution.dual.size() == m;
  for (std::size_t t = 0; dual_sized && t < m; ++t) {
    dual += solution.dual[t];
    chk.min_dual = std::min(chk.min_dual, solution.dual[t]);
  }
  chk.max_dual_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; dual_sized && i < problem.num_candidates(); ++i) {
    if (problem.costs[i].is_infinite()) continue;
    long double load = 0.0L;
    const auto& inc = problem.incidence[i];
    for (auto t = inc.find_first(); t != PointSet::npos; t = inc.find_next(t)) load += solution.dual[t];
    chk.max_dual_excess =
        std::max(chk.max_dual_excess, static_cast<double>(load - problem.costs[i].value()));
  }
  if (problem.num_candidates() == 0) chk.max_dual_excess = 0.0;
  chk.gap = static_cast<double>(std::abs(primal - dual));
  const double scale = std::max(1.0, static_cast<double>(primal));
  chk.ok = weights_ok && dual_sized && chk.min_coverage >= 1.0 - kSolverTolerance &&
           chk.min_dual >= 0.0 && chk.max_dual_excess <= kSolverTolerance &&
           chk.gap <= kSolverTolerance * scale;
  return chk;
}

FractionalCoverSolution solve_fractional_cover(const CoverProblem& problem) {
  FractionalCoverSolution sol;
  const std::size_t m = problem.num_targets;
  sol.weights.assign(problem.num_candidates(), 0.0);
  sol.value = Extended::zero();
  if (m == 0) return sol;

  // Finite-cost columns only; an infinite cost at positive weight would make the
  // objective infinite, so such candidates stay at c_i = 0.
  std::vector<std::size_t> cols;
  std::vector<std::vector<std::size_t>> col_rows;
  std::vector<double> costs;
  std::vector<std::uint8_t> reachable(m, 0);
  for (std::size_t i = 0; i < problem.num_candidates(); ++i) {
    if (problem.costs[i].is_infinite()) continue;
    const auto& inc = problem.incidence[i];
    if (inc.none()) continue;
    std::vector<std::size_t> rows;
    for (auto t = inc.find_first(); t != PointSet::npos; t = inc.find_next(t)) {
      rows.push_back(t);
      reachable[t] = 1;
    }
    cols.push_back(i);
    col_rows.push_back(std::move(rows));
    costs.push_back(problem.costs[i].value());
  }
  if (std::find(reachable.begin(), reachable.end(), 0) != reachable.end()) {
    sol.status = CoverStatus::kInfeasibleInfinite;
    sol.value = Extended::infinity();
    sol.dual.assign(m, 0.0);
    sol.dual_value = std::numeric_limits<double>::infinity();
    return sol;
  }

  const std::size_t n = cols.size();
  DualSimplex lp(m, n, col_rows, costs);
  std::uint64_t iterations = 0;
  if (!lp.solve(&iterations)) {
    throw NumericalFailure("covering LP reported infeasible although every target is coverable",
                           std::numeric_limits<double>::infinity(), 0.0);
  }
  sol.iterations = iterations;

  auto fill = [&](const std::vector<double>& x, const std::vector<double>& y) {
    FractionalCoverSolution s = sol;
    std::fill(s.weights.begin(), s.weights.end(), 0.0);
    long double primal = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
      s.weights[cols[k]] = x[k];
      primal += static_cast<long double>(x[k]) * costs[k];
    }
    s.dual = y;
    long double dual = 0.0L;
    for (double v : y) dual += v;
    s.value = Extended(static_cast<double>(std::max(primal, 0.0L)));
    s.dual_value = static_cast<double>(dual);
    s.gap = static_cast<double>(std::abs(primal - dual));
    return s;
  };
  auto clamp = [](double v) { return v < 0.0 && v > -1e-9 ? 0.0 : v; };

  // Tableau readout.
  std::vector<double> x_tab(n, 0.0);
  std::vector<double> y_tab(m, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (lp.basis()[r] < n) x_tab[lp.basis()[r]] = clamp(lp.rhs(r));
  for (std::size_t t = 0; t < m; ++t) y_tab[t] = clamp(lp.reduced_cost(n + t));

  // Refined readout: re-solve the final basis against the original data.
  std::optional<FractionalCoverSolution> refined;
  {
    std::vector<long double> bmat(m * m, 0.0L);
    std::vector<long double> cb(m, 0.0L);
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t j = lp.basis()[k];
      if (j < n) {
        for (auto r : col_rows[j]) bmat[r * m + k] = -1.0L;
        cb[k] = costs[j];
      } else {
        bmat[(j - n) * m + k] = 1.0L;
      }
    }
    auto xb = dense_solve(bmat, m, std::vector<long double>(m, -1.0L), false);
    auto pi = dense_solve(bmat, m, cb, true);
    if (xb && pi) {
      std::vector<double> x(n, 0.0);
      std::vector<double> y(m, 0.0);
      for (std::size_t k = 0; k < m; ++k)
        if (lp.basis()[k] < n) x[lp.basis()[k]] = clamp(static_cast<double>((*xb)[k]));
      for (std::size_t t = 0; t < m; ++t) y[t] = clamp(static_cast<double>(-(*pi)[t]));
      refined = fill(x, y);
    }
  }

  if (refined && check_certificate(problem, *refined).ok) return *refined;
  FractionalCoverSolution tab = fill(x_tab, y_tab);
  if (check_certificate(problem, tab).ok) return tab;
  throw NumericalFailure("covering LP certificate gap not closed", tab.value.value(),
                         tab.dual_value);
}

}  // namespace mfh
