#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mfh/errors.hpp"
#include "mfh/generators.hpp"
#include "mfh/io.hpp"

using namespace mfh;

namespace {

void expect_same(const Instance& a, const Instance& b) {
  CHECK(a.id == b.id);
  CHECK(a.space.ids() == b.space.ids());
  CHECK(a.space.distance_matrix() == b.space.distance_matrix());
  CHECK(a.space.coords() == b.space.coords());
  CHECK(a.space.epsilon_net() == b.space.epsilon_net());
  CHECK(a.measure.masses() == b.measure.masses());
  CHECK(a.target == b.target);
}

}  // namespace

TEST_CASE("instance json round-trips bit for bit") {
  Rng rng(17);
  std::vector<Instance> cases{cantor_net(5, 0.3, 0.37), random_cloud(7, 2, 4), cycle_metric(6)};
  cases[1].measure = random_measure(7, rng);
  cases[2].target = std::vector<PointIndex>{1, 4};
  for (const auto& inst : cases) {
    const std::string text = instance_to_json(inst).dump();
    expect_same(inst, instance_from_json(Json::parse(text)));
  }

  const auto path = std::filesystem::temp_directory_path() / "mfh_roundtrip.json";
  write_instance(cases[0], path.string());
  expect_same(cases[0], read_instance(path.string()));
  std::filesystem::remove(path);
}

TEST_CASE("instance json defaults") {
  const auto j = Json::parse(R"({"points": ["a", "b", "c"], "dist": [[0,1,2],[1,0,1],[2,1,0]],
                                 "epsilon_net": 0.1, "target": ["c"]})");
  const auto inst = instance_from_json(j);
  CHECK(inst.measure.masses() == std::vector<double>(3, 1.0 / 3.0));
  CHECK(inst.target == std::vector<PointIndex>{2});

  const auto partial = Json::parse(R"({"points": ["a", "b"], "coords": [[0],[1]],
                                       "measure": {"b": 1.0}, "epsilon_net": 0.5})");
  CHECK(instance_from_json(partial).measure.masses() == std::vector<double>{0.0, 1.0});
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"points": ["a"], "dist": [[0]]})")), Error);
}

TEST_CASE("premeasure specs") {
  const auto mu = PointMeasure::uniform(2);
  const auto s = space_from_matrix({{0, 1}, {1, 0}}, 0.1);
  const auto h = premeasure_from_json(Json::parse(R"({"kind": "hausdorff", "h": {"power": 0.5}})"), mu);
  CHECK(h(s, {0, 0.5}).value() == 1.0);
  const auto mp = premeasure_from_json(Json::parse(R"({"kind": "measure_power", "p": 1})"), mu);
  CHECK(mp(s, {0, 0.5}).value() == doctest::Approx(0.5));
  const auto c = premeasure_from_json(Json::parse(R"({"kind": "constant_nonempty", "c": 2})"), mu);
  CHECK(c(s, {0, 0.5}).value() == 2.0);
  CHECK_THROWS(premeasure_from_json(Json::parse(R"({"kind": "nope"})"), mu));

  for (const auto& spec : {Json("identity"), Json{{"power", 0.25}}, Json{{"linear", 3.0}},
                           Json{{"constant_after_zero", 2.0}},
                           Json{{"table", {{0.5, 1.0}, {1.0, 1.5}}}}}) {
    CHECK(hausdorff_function_to_json(hausdorff_function_from_json(spec)) == spec);
  }

  const auto p = product_space(s, s);
  const auto hxh = rectangle_premeasure_from_json(
      Json::parse(R"({"kind": "hxh", "h": "identity", "h_prime": "identity"})"), mu, mu);
  CHECK(hxh(p, {{0, 0.1}, {1, 0.5}}).value() == doctest::Approx(1.0));
}

TEST_CASE("config parsing") {
  const auto c = config_from_json(Json::parse(R"({
      "instances": [{"generator": "cycle", "n": 5, "id": "c5"},
                    {"generator": "cantor_net", "level": 2, "c_inverse": 3, "measure": {"random": 4}}],
      "q_grid": [0, 1], "delta_grid": [1.0], "seed": 9, "suites": ["wh-order"],
      "tolerances": {"solver": 1e-10}})"));
  CHECK(c.q_grid == std::vector<double>{0, 1});
  CHECK(c.seed == 9);
  CHECK(c.tolerances.solver == 1e-10);
  CHECK(c.tolerances.check == 1e-7);
  const auto inst = load_instances(c);
  REQUIRE(inst.size() == 2);
  CHECK(inst[0].id == "c5");
  CHECK(inst[1].space.size() == 4);
  CHECK(!(inst[1].measure.masses() == std::vector<double>(4, 0.25)));

  const Config defaults = config_from_json(Json::object());
  CHECK(defaults.q_grid == std::vector<double>{-1.0, 0.0, 0.5, 1.0, 2.0});
  CHECK(defaults.tolerances.solver == 1e-9);

  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"bogus": 1})")), ConfigParse);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"q_grid": "x"})")), ConfigParse);
  CHECK_THROWS_AS(generate_instance(Json::parse(R"({"generator": "torus"})")), ConfigParse);
  CHECK_THROWS_AS(read_config("/nonexistent/config.json"), ConfigParse);

  const auto missing = config_from_json(Json::parse(R"({"instances": [{"file": "/nonexistent.json"}]})"));
  CHECK_THROWS_AS(load_instances(missing), MissingInstance);
}

TEST_CASE("relative instance files resolve against the config directory") {
  const auto dir = std::filesystem::temp_directory_path() / "mfh_cfg_test";
  std::filesystem::create_directories(dir);
  write_instance(cycle_metric(4), (dir / "c4.json").string());
  {
    std::ofstream out(dir / "config.json");
    out << R"({"instances": ["c4.json"]})";
  }
  const auto c = read_config((dir / "config.json").string());
  CHECK(load_instances(c).front().space.size() == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("csv numbers") {
  CHECK(csv_number(0.2) == "0.2");
  CHECK(csv_number(INFINITY) == "inf");
}
