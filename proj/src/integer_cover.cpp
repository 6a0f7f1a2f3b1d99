#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mfh/cover.hpp"

namespace mfh {

namespace {

using Word = std::uint64_t;

struct Bits {
  std::vector<Word> w;
  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { w[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(Word{1} << (i & 63)); }
  bool none() const {
    return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
  }
};

// Branch-and-bound over the positive-cost candidates that survive preprocessing.
class BranchAndBound {
 public:
  BranchAndBound(std::size_t num_targets, std::vector<std::vector<std::size_t>> members,
                 std::vector<double> costs, std::uint64_t node_limit)
      : m_(num_targets),
        members_(std::move(members)),
        costs_(std::move(costs)),
        node_limit_(node_limit),
        forbidden_(costs_.size(), 0),
        covering_(num_targets) {
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (auto t : members_[i]) covering_[t].push_back(i);
    y_.assign(m_, 0.0);
    slack_.assign(costs_.size(), 0.0);
    live_.assign(costs_.size(), 0);
    best_ = std::numeric_limits<double>::infinity();
  }

  void set_incumbent(std::vector<std::size_t> chosen, double value) {
    best_chosen_ = std::move(chosen);
    best_ = value;
  }

  void run(const Bits& uncovered) {
    Bits u = uncovered;
    std::vector<std::size_t> stack;
    dfs(u, 0.0, stack, true);
  }

  double best() const { return best_; }
  const std::vector<std::size_t>& best_chosen() const { return best_chosen_; }
  std::uint64_t nodes() const { return nodes_; }
  double root_bound() const { return root_bound_; }

 private:
  double prune_slack() const { return 1e-12 * std::max(1.0, best_); }

  // Dual-feasible lower bound for covering `u` with non-forbidden candidates.
  // Returns -1 when some uncovered target has no admissible candidate.
  double lower_bound(const Bits& u, std::size_t* branch_target) {
    for (std::size_t i = 0; i < costs_.size(); ++i) {
      live_[i] = 0;
      if (forbidden_[i]) continue;
      std::size_t k = 0;
      for (auto t : members_[i]) k += u.test(t);
      live_[i] = static_cast<std::uint32_t>(k);
    }
    double lb = 0.0;
    std::size_t best_t = m_;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t t = 0; t < m_; ++t) {
      if (!u.test(t)) {
        y_[t] = 0.0;
        continue;
      }
      double y = std::numeric_limits<double>::infinity();
      std::size_t count = 0;
      for (auto i : covering_[t]) {
        if (live_[i] == 0) continue;
        ++count;
        y = std::min(y, costs_[i] / live_[i]);
      }
      if (count == 0) return -1.0;
      if (count < best_count) {
        best_count = count;
        best_t = t;
      }
      y_[t] = y;
    }
    // Each candidate's share bound leaves it with nonnegative slack; spend it greedily.
    for (std::size_t i = 0; i < costs_.size(); ++i) {
      if (live_[i] == 0) continue;
      double load = 0.0;
      for (auto t : members_[i])
        if (u.test(t)) load += y_[t];
      slack_[i] = std::max(0.0, costs_[i] - load);
    }
    for (std::size_t t = 0; t < m_; ++t) {
      if (!u.test(t)) continue;
      double raise = std::numeric_limits<double>::infinity();
      for (auto i : covering_[t])
        if (live_[i] != 0) raise = std::min(raise, slack_[i]);
      if (raise > 0.0) {
        y_[t] += raise;
        for (auto i : covering_[t])
          if (live_[i] != 0) slack_[i] -= raise;
      }
      lb += y_[t];
    }
    *branch_target = best_t;
    return lb;
  }

  void dfs(Bits& u, double cost, std::vector<std::size_t>& stack, bool root) {
    if (++nodes_ > node_limit_) {
      throw CandidateLimitExceeded(root_bound_, best_);
    }
    if (u.none()) {
      if (cost < best_) {
        best_ = cost;
        best_chosen_ = stack;
      }
      return;
    }
    std::size_t target = 0;
    const double lb = lower_bound(u, &target);
    if (root) root_bound_ = lb < 0.0 ? std::numeric_limits<double>::infinity() : cost + lb;
    if (lb < 0.0) return;
    if (cost + lb >= best_ - prune_slack()) return;

    // Branch on the target with the fewest admissible candidates; try the candidates in
    // order of descending coverage per unit cost, ties by instance order.
    std::vector<std::pair<double, std::size_t>> order;
    for (auto i : covering_[target]) {
      if (live_[i] == 0) continue;
      order.emplace_back(static_cast<double>(live_[i]) / costs_[i], i);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });

    std::vector<std::size_t> undo;
    for (const auto& [ratio, i] : order) {
      (void)ratio;
      Bits next = u;
      for (auto t : members_[i]) next.reset(t);
      stack.push_back(i);
      dfs(next, cost + costs_[i], stack, false);
      stack.pop_back();
      forbidden_[i] = 1;
      undo.push_back(i);
    }
    for (auto i : undo) forbidden_[i] = 0;
  }

  std::size_t m_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<double> costs_;
  std::uint64_t node_limit_;
  std::vector<std::uint8_t> forbidden_;
  std::vector<std::vector<std::size_t>> covering_;
  std::vector<double> y_;
  std::vector<double> slack_;
  std::vector<std::uint32_t> live_;
  double best_;
  std::vector<std::size_t> best_chosen_;
  std::uint64_t nodes_ = 0;
  double root_bound_ = 0.0;
};

// Removes candidates whose coverage is contained in a no-more-expensive candidate.
std::vector<std::size_t> undominated(const std::vector<std::vector<std::size_t>>& members,
                                     const std::vector<Bits>& bits,
                                     const std::vector<double>& costs) {
  const std::size_t n = members.size();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < n && !dominated; ++j) {
      if (i == j || costs[j] > costs[i] || members[j].size() < members[i].size()) continue;
      // Identical rows: keep the earliest.
      if (members[j].size() == members[i].size() && costs[j] == costs[i] && j > i) continue;
      bool subset = true;
      for (std::size_t w = 0; w < bits[i].w.size() && subset; ++w)
        subset = (bits[i].w[w] & ~bits[j].w[w]) == 0;
      dominated = subset;
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

constexpr std::size_t kDominanceLimit = 4000;

}  // namespace

IntegerCoverSolution solve_integer_cover(const CoverProblem& problem,
                                         const IntegerSolverOptions& options) {
  IntegerCoverSolution sol;
  sol.value = Extended::zero();
  const std::size_t m = problem.num_targets;
  if (m == 0) return sol;

  // Zero-cost candidates never hurt: take the ones that add coverage.
  Bits uncovered(m);
  for (std::size_t t = 0; t < m; ++t) uncovered.set(t);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < problem.num_candidates(); ++i) {
    if (!problem.costs[i].is_zero()) continue;
    bool adds = false;
    const auto& inc = problem.incidence[i];
    for (auto t = inc.find_first(); t != PointSet::npos; t = inc.find_next(t)) {
      if (uncovered.test(t)) {
        adds = true;
        uncovered.reset(t);
      }
    }
    if (adds) chosen.push_back(i);
  }

  // Positive finite candidates restricted to what is still uncovered.
  std::vector<std::size_t> orig;
  std::vector<std::vector<std::size_t>> members;
  std::vector<Bits> bits;
  std::vector<double> costs;
  Bits reachable(m);
  for (std::size_t i = 0; i < problem.num_candidates(); ++i) {
    const Extended c = problem.costs[i];
    if (c.is_zero() || c.is_infinite()) continue;
    std::vector<std::size_t> mem;
    Bits b(m);
    const auto& inc = problem.incidence[i];
    for (auto t = inc.find_first(); t != PointSet::npos; t = inc.find_next(t)) {
      if (uncovered.test(t)) {
        mem.push_back(t);
        b.set(t);
        reachable.set(t);
      }
    }
    if (mem.empty()) continue;
    orig.push_back(i);
    members.push_back(std::move(mem));
    bits.push_back(std::move(b));
    costs.push_back(c.value());
  }
  for (std::size_t t = 0; t < m; ++t) {
    if (uncovered.test(t) && !reachable.test(t)) {
      sol.status = CoverStatus::kInfeasibleInfinite;
      sol.value = Extended::infinity();
      return sol;
    }
  }
  if (uncovered.none()) {
    sol.chosen = chosen;
    std::sort(sol.chosen.begin(), sol.chosen.end());
    return sol;
  }

  if (members.size() <= kDominanceLimit) {
    const auto keep = undominated(members, bits, costs);
    std::vector<std::size_t> o2;
    std::vector<std::vector<std::size_t>> m2;
    std::vector<double> c2;
    for (auto k : keep) {
      o2.push_back(orig[k]);
      m2.push_back(std::move(members[k]));
      c2.push_back(costs[k]);
    }
    orig = std::move(o2);
    members = std::move(m2);
    costs = std::move(c2);
  }

  // Greedy incumbent: best coverage per cost, then drop redundant picks.
  std::vector<std::size_t> greedy;
  {
    Bits u = uncovered;
    std::size_t left = 0;
    for (std::size_t t = 0; t < m; ++t) left += u.test(t);
    while (left > 0) {
      double best_ratio = -1.0;
      std::size_t pick = 0;
      for (std::size_t i = 0; i < members.size(); ++i) {
        std::size_t k = 0;
        for (auto t : members[i]) k += u.test(t);
        if (k == 0) continue;
        const double ratio = static_cast<double>(k) / costs[i];
        if (ratio > best_ratio) {
          best_ratio = ratio;
          pick = i;
        }
      }
      greedy.push_back(pick);
      for (auto t : members[pick]) {
        if (u.test(t)) {
          u.reset(t);
          --left;
        }
      }
    }
    std::vector<std::size_t> cover_count(m, 0);
    for (auto i : greedy)
      for (auto t : members[i]) ++cover_count[t];
    std::vector<std::size_t> by_cost = greedy;
    std::sort(by_cost.begin(), by_cost.end(),
              [&](std::size_t a, std::size_t b) { return costs[a] > costs[b]; });
    std::vector<std::size_t> kept;
    for (auto i : by_cost) {
      const bool redundant = std::all_of(members[i].begin(), members[i].end(),
                                         [&](std::size_t t) { return cover_count[t] > 1; });
      if (redundant) {
        for (auto t : members[i]) --cover_count[t];
      } else {
        kept.push_back(i);
      }
    }
    greedy = std::move(kept);
  }
  double greedy_value = 0.0;
  for (auto i : greedy) greedy_value += costs[i];

  BranchAndBound bnb(m, members, costs, options.node_limit);
  bnb.set_incumbent(greedy, greedy_value);
  bnb.run(uncovered);

  for (auto i : bnb.best_chosen()) chosen.push_back(orig[i]);
  std::sort(chosen.begin(), chosen.end());
  Extended value = Extended::zero();
  for (auto i : chosen) value += problem.costs[i];
  sol.chosen = std::move(chosen);
  sol.value = value;
  sol.nodes = bnb.nodes();
  return sol;
}

}  // namespace mfh
