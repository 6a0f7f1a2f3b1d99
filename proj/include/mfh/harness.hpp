#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mfh/cover.hpp"
#include "mfh/generators.hpp"
#include "mfh/io.hpp"

namespace mfh {

// ---------------------------------------------------------------------------
// Seeded corpora.

/// One single-space evaluation: H, W and the non-centered W of `target` at (q, delta).
struct SingleCase {
  std::string id;
  Instance instance;
  std::vector<PointIndex> target;
  double q = 0.0;
  double delta = 0.0;
  Json xi_spec;
  Premeasure xi;
};

/// E x F in the product of two instances, with either a product premeasure or h x h'.
struct ProductCase {
  std::string id;
  Instance left;
  Instance right;
  std::vector<PointIndex> left_set;
  std::vector<PointIndex> right_set;
  double q = 0.0;
  double delta = 0.0;
  Json xi_spec;  // {"kind": "product", ...} or {"kind": "hxh", ...}
  Premeasure xi_left;
  Premeasure xi_right;
};

/// Two targets E, F in one space; `separated` means dist(E, F) > 2 delta.
struct PairCase {
  std::string id;
  Instance instance;
  std::vector<PointIndex> e;
  std::vector<PointIndex> f;
  double q = 0.0;
  double delta = 0.0;
  bool separated = false;
  Json xi_spec;
  Premeasure xi;
};

/// Mixed generators, measures (some with zero-mass points), premeasures and q values.
std::vector<SingleCase> general_corpus(std::uint64_t seed, std::size_t count);
/// At most 7 points, 14 candidates and 10 targets; q in {-1, 0, 1}.
std::vector<SingleCase> oracle_corpus(std::uint64_t seed, std::size_t count);
/// Cantor nets and uniform grids under power Hausdorff functions.
std::vector<SingleCase> doubling_corpus(std::uint64_t seed, std::size_t count);
/// Full-support factors of at most 6 points with product premeasures.
std::vector<ProductCase> product_corpus(std::uint64_t seed, std::size_t count);
/// Full-support factors with h, h' in {r, r^0.5, r^(log 2 / log 3)}; xi_spec is the hxh form.
std::vector<ProductCase> hxh_corpus(std::uint64_t seed, std::size_t count);
/// E holds an isolated zero-mass point (q <= 0), F carries the zero premeasure.
std::vector<ProductCase> zero_infinite_corpus(std::uint64_t seed, std::size_t count);
/// Alternates separated Cantor-cylinder pairs with arbitrary pairs.
std::vector<PairCase> subadditivity_corpus(std::uint64_t seed, std::size_t count);

/// Distinct seed per corpus derived from the run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);

// ---------------------------------------------------------------------------
// Verification suites.

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 0;  // 0: the suite's default size
  Tolerances tolerances;
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;  // one line each: instance, q, delta, both sides
  std::vector<std::string> findings;    // measured quantities, never failures
  double seconds = 0.0;
  bool passed() const { return violations.empty(); }
};

/// wh-order, subadd, product-w, sandwich, zero-infinite, noncentered, hxh, density, vitali,
/// besicovitch, lemma-8c, example-zero, plus oracle and blanketing.
const std::vector<std::string>& suite_names();

/// Throws SuiteUnknown.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

std::string format_report(const SuiteReport& report);

// ---------------------------------------------------------------------------
// Sweeps.

enum class Family { kH, kW, kWtilde };
std::string family_name(Family f);
/// "H", "W" or "Wtilde"; throws ConfigParse otherwise.
Family parse_family(const std::string& name);

struct SweepRow {
  std::size_t instance_order = 0;
  std::string instance_id;
  double q = 0.0;
  double delta = 0.0;
  Family family = Family::kH;
  Extended value;
  std::string status;  // optimal | infeasible | error
  double gap = 0.0;
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
  std::string error;
};

/// One cell of the grid.
SweepRow compute_cell(const Instance& instance, const Json& xi_spec, double q, double delta,
                      Family family);

struct SweepOptions {
  std::vector<double> q_grid;
  std::vector<double> delta_grid;  // empty: per-instance default grid
  std::vector<Family> families{Family::kH, Family::kW, Family::kWtilde};
  std::size_t jobs = 1;
  bool deterministic = false;  // wall_ms reported as 0
};

/// Descending, at most six radii from the realized distances plus epsilon_net.
std::vector<double> default_delta_grid(const FiniteMetricSpace& space);

/// Cells run on a bounded worker pool; rows come back in (instance, q, delta, family) order.
std::vector<SweepRow> run_sweep(const std::vector<Instance>& instances, const Json& xi_spec,
                                const SweepOptions& options);

std::string csv_header();
std::string csv_row(const SweepRow& row);

}  // namespace mfh
