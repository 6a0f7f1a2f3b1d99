#include <set>

#include "doctest.h"
#include "mfh/errors.hpp"
#include "mfh/harness.hpp"

using namespace mfh;

namespace {

std::vector<std::string> render(const std::vector<SweepRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(csv_row(r));
  return out;
}

}  // namespace

TEST_CASE("compute cell on T2") {
  Instance t2{"t2", space_from_matrix({{0, 1}, {1, 0}}, 0.1), PointMeasure::uniform(2), {}};
  const Json xi{{"kind", "hausdorff"}, {"h", "identity"}};
  const auto w = compute_cell(t2, xi, 1.0, 0.6, Family::kW);
  CHECK(w.status == "optimal");
  CHECK(w.value.value() == doctest::Approx(0.2));
  CHECK(csv_row(w).rfind("t2,1,0.6,W,0.2,optimal,", 0) == 0);

  const auto bad = compute_cell(t2, xi, 1.0, 0.01, Family::kH);
  CHECK(bad.status == "error");
  CHECK(!bad.error.empty());
}

TEST_CASE("families") {
  for (auto f : {Family::kH, Family::kW, Family::kWtilde}) CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("X"), ConfigParse);
}

TEST_CASE("sweeps are ordered and independent of the worker count") {
  std::vector<Instance> instances{cycle_metric(5), cantor_net(3, 1.0 / 3.0, 0.3),
                                  uniform_grid(4, 1)};
  const Json xi{{"kind", "hausdorff"}, {"h", {{"power", 0.5}}}};
  SweepOptions opt;
  opt.q_grid = {-1.0, 0.0, 1.0};
  opt.deterministic = true;
  const auto serial = run_sweep(instances, xi, opt);
  opt.jobs = 4;
  const auto parallel = run_sweep(instances, xi, opt);
  CHECK(render(serial) == render(parallel));

  std::size_t expected = 0;
  for (const auto& inst : instances) expected += 3 * 3 * default_delta_grid(inst.space).size();
  CHECK(serial.size() == expected);

  for (std::size_t k = 1; k < serial.size(); ++k) {
    const auto& a = serial[k - 1];
    const auto& b = serial[k];
    if (a.instance_order != b.instance_order) {
      CHECK(a.instance_order < b.instance_order);
    } else if (a.q != b.q) {
      CHECK(a.q < b.q);
    } else if (a.delta != b.delta) {
      CHECK(a.delta > b.delta);
    } else {
      CHECK(a.family < b.family);
    }
  }
  for (const auto& r : serial) {
    CHECK(r.wall_ms == 0.0);
    CHECK(r.status != "error");
  }
}

TEST_CASE("default delta grid") {
  const auto net = cantor_net(4, 1.0 / 3.0, 0.5);
  const auto g = default_delta_grid(net.space);
  CHECK(g.size() <= 6);
  CHECK(g.back() == net.space.epsilon_net());
  for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k - 1] > g[k]);
}

TEST_CASE("corpora are seeded") {
  const auto a = general_corpus(5, 20);
  const auto b = general_corpus(5, 20);
  const auto c = general_corpus(6, 20);
  REQUIRE(a.size() == 20);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].delta == b[i].delta);
    CHECK(a[i].target == b[i].target);
    differs |= a[i].id != c[i].id || a[i].delta != c[i].delta;
  }
  CHECK(differs);
  CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
  CHECK(derive_seed(1, "a") == derive_seed(1, "a"));
}

TEST_CASE("oracle corpus respects its size limits") {
  for (const auto& c : oracle_corpus(3, 60)) {
    CHECK(c.instance.space.size() <= 7);
    const auto inst = centered_instance(c.instance.space, c.instance.measure, c.q, c.xi,
                                        c.target, c.delta);
    CHECK(inst.candidates.size() <= 14);
    CHECK((c.q == -1.0 || c.q == 0.0 || c.q == 1.0));
  }
}

TEST_CASE("zero-infinite corpus shape") {
  for (const auto& c : zero_infinite_corpus(2, 20)) {
    CHECK(c.q <= 0.0);
    const auto h = hausdorff_premeasure(c.left.space, c.left.measure, c.q, c.xi_left, c.left_set,
                                        c.delta);
    CHECK(h.value.is_infinite());
    const auto hf = hausdorff_premeasure(c.right.space, c.right.measure, c.q, c.xi_right,
                                         c.right_set, c.delta);
    CHECK(hf.value.is_zero());
  }
}

TEST_CASE("suites") {
  const std::set<std::string> names(suite_names().begin(), suite_names().end());
  for (const char* n : {"wh-order", "subadd", "product-w", "sandwich", "zero-infinite",
                        "noncentered", "hxh", "density", "vitali", "besicovitch", "lemma-8c",
                        "example-zero"})
    CHECK(names.count(n) == 1);
  CHECK_THROWS_AS(run_suite("nope", {}), SuiteUnknown);

  SuiteOptions small;
  small.cases = 10;
  for (std::string n : {"oracle", "wh-order", "subadd", "noncentered", "vitali"}) {
    const auto rep = run_suite(n, small);
    CAPTURE(n);
    CHECK(rep.passed());
    CHECK(rep.cases >= 10);
    CHECK(format_report(rep).find("PASS") != std::string::npos);
  }
}

TEST_CASE("a violated tolerance fails the suite") {
  // a negative solver tolerance demands W < H strictly, which fails wherever W = H
  SuiteOptions strict;
  strict.cases = 30;
  strict.tolerances.solver = -1e-3;
  const auto rep = run_suite("wh-order", strict);
  CHECK(!rep.passed());
  CHECK(format_report(rep).find("FAIL") != std::string::npos);
}
