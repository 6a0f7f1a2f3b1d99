// Exhaustive reference values for small covering instances. Shares no code with the
// branch-and-bound or simplex paths.

#include <algorithm>
#include <cmath>
#include <limits>

#include "mfh/cover.hpp"

namespace mfh {

namespace {

constexpr std::size_t kMaxCandidates = 20;
constexpr std::size_t kMaxTargets = 10;

Extended integer_by_subsets(const CoverProblem& p) {
  const std::size_t n = p.num_candidates();
  const std::size_t m = p.num_targets;
  std::vector<std::uint32_t> masks(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < m; ++t)
      if (p.incidence[i].test(t)) masks[i] |= 1U << t;
  const std::uint32_t full = m == 32 ? ~0U : ((1U << m) - 1U);
  Extended best = Extended::infinity();
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    std::uint32_t covered = 0;
    Extended cost = Extended::zero();
    for (std::size_t i = 0; i < n; ++i) {
      if ((subset >> i) & 1U) {
        covered |= masks[i];
        cost += p.costs[i];
      }
    }
    if ((covered & full) == full && cost < best) best = cost;
  }
  return best;
}

// Solves a k x k system in place; false when singular.
bool gauss(std::vector<long double>& a, std::vector<long double>& b, std::size_t k) {
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::abs(a[r * k + c]) > std::abs(a[piv * k + c])) piv = r;
    if (std::abs(a[piv * k + c]) < 1e-12L) return false;
    for (std::size_t j = 0; j < k; ++j) std::swap(a[c * k + j], a[piv * k + j]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const long double f = a[r * k + c] / a[c * k + c];
      for (std::size_t j = 0; j < k; ++j) a[r * k + j] -= f * a[c * k + j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = 0; c < k; ++c) b[c] /= a[c * k + c];
  return true;
}

// Calls f(indices) for every k-subset of {0..n-1}.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Minimum of c.x over vertices of {x >= 0 : A x >= 1}: each vertex has a support S and an
// equally sized set T of tight rows with A[T,S] x_S = 1.
Extended fractional_by_vertices(const CoverProblem& p) {
  const std::size_t m = p.num_targets;
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < p.num_candidates(); ++i)
    if (p.costs[i].is_finite()) finite.push_back(i);
  const std::size_t n = finite.size();
  long double best = std::numeric_limits<long double>::infinity();
  const std::size_t kmax = std::min(m, n);
  for (std::size_t k = 1; k <= kmax; ++k) {
    for_each_combination(n, k, [&](const std::vector<std::size_t>& support) {
      for_each_combination(m, k, [&](const std::vector<std::size_t>& rows) {
        std::vector<long double> a(k * k);
        std::vector<long double> b(k, 1.0L);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c)
            a[r * k + c] = p.incidence[finite[support[c]]].test(rows[r]) ? 1.0L : 0.0L;
        if (!gauss(a, b, k)) return;
        for (std::size_t c = 0; c < k; ++c)
          if (b[c] < -1e-12L) return;
        for (std::size_t t = 0; t < m; ++t) {
          long double cov = 0.0L;
          for (std::size_t c = 0; c < k; ++c)
            if (p.incidence[finite[support[c]]].test(t)) cov += b[c];
          if (cov < 1.0L - 1e-12L) return;
        }
        long double obj = 0.0L;
        for (std::size_t c = 0; c < k; ++c)
          obj += std::max(b[c], 0.0L) * p.costs[finite[support[c]]].value();
        best = std::min(best, obj);
      });
    });
  }
  if (std::isinf(best)) return Extended::infinity();
  return Extended(static_cast<double>(std::max(best, 0.0L)));
}

}  // namespace

OracleValues brute_force_oracle(const CoverProblem& problem) {
  if (problem.num_candidates() > kMaxCandidates || problem.num_targets > kMaxTargets) {
    throw SizeLimit("oracle limited to 20 candidates and 10 targets");
  }
  if (problem.num_targets == 0) return {Extended::zero(), Extended::zero()};
  return {integer_by_subsets(problem), fractional_by_vertices(problem)};
}

}  // namespace mfh
