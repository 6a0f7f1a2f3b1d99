#include "mfh/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mfh {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string id_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ConfigParse("point ids must be strings or integers");
}

PointIndex lookup(const FiniteMetricSpace& space, const Json& id) {
  const auto idx = space.index_of(id_text(id));
  if (!idx) throw ConfigParse("unknown point id " + id.dump());
  return *idx;
}

double number(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ConfigParse(std::string("expected a number for '") + key + "'");
  return j[key].get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingInstance("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigParse(path + ": " + e.what());
  }
}

}  // namespace

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigParse("instance must be a JSON object");
  try {
    RawSpace raw;
    if (j.contains("points"))
      for (const auto& p : j.at("points")) raw.ids.push_back(id_text(p));
    if (j.contains("dist")) raw.dist = j.at("dist").get<std::vector<std::vector<double>>>();
    if (j.contains("coords")) raw.coords = j.at("coords").get<std::vector<std::vector<double>>>();
    if (!raw.dist && !raw.coords) throw ConfigParse("instance needs 'dist' or 'coords'");
    raw.epsilon_net = number(j, "epsilon_net");

    Instance inst;
    inst.id = j.value("id", std::string("instance"));
    inst.space = validate_space(raw);

    std::vector<double> masses(inst.space.size(), 0.0);
    if (!j.contains("measure")) {
      inst.measure = PointMeasure::uniform(inst.space.size());
    } else {
      for (const auto& [key, value] : j.at("measure").items()) {
        const auto idx = inst.space.index_of(key);
        if (!idx) throw ConfigParse("measure refers to unknown point '" + key + "'");
        masses[*idx] = value.get<double>();
      }
      inst.measure = PointMeasure::from_masses(std::move(masses));
    }
    if (j.contains("target")) {
      std::vector<PointIndex> t;
      for (const auto& p : j.at("target")) t.push_back(lookup(inst.space, p));
      inst.target = std::move(t);
    }
    return inst;
  } catch (const Json::exception& e) {
    throw ConfigParse(std::string("malformed instance: ") + e.what());
  }
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["id"] = inst.id;
  j["points"] = inst.space.ids();
  j["dist"] = inst.space.distance_matrix();
  if (inst.space.has_coords()) j["coords"] = inst.space.coords();
  Json m = Json::object();
  for (std::size_t i = 0; i < inst.space.size(); ++i) m[inst.space.ids()[i]] = inst.measure.mass(i);
  j["measure"] = m;
  j["epsilon_net"] = inst.space.epsilon_net();
  if (inst.target) {
    Json t = Json::array();
    for (auto i : *inst.target) t.push_back(inst.space.ids()[i]);
    j["target"] = t;
  }
  return j;
}

Instance read_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

void write_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << instance_to_json(inst).dump() << '\n';
}

HausdorffFunction hausdorff_function_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "identity") return HausdorffFunction::identity();
    throw ConfigParse("unknown Hausdorff function " + j.dump());
  }
  if (!j.is_object() || j.size() != 1) throw ConfigParse("malformed Hausdorff function " + j.dump());
  if (j.contains("power")) return HausdorffFunction::power(number(j, "power"));
  if (j.contains("linear")) return HausdorffFunction::linear(number(j, "linear"));
  if (j.contains("constant_after_zero"))
    return HausdorffFunction::constant_after_zero(number(j, "constant_after_zero"));
  if (j.contains("table")) {
    std::vector<std::pair<double, double>> bp;
    try {
      for (const auto& row : j.at("table")) bp.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
    } catch (const Json::exception& e) {
      throw ConfigParse(std::string("malformed table: ") + e.what());
    }
    return HausdorffFunction::table(std::move(bp));
  }
  throw ConfigParse("unknown Hausdorff function " + j.dump());
}

Json hausdorff_function_to_json(const HausdorffFunction& h) {
  return std::visit(
      overloaded{
          [](const HausdorffFunction::Power& p) { return Json{{"power", p.exponent}}; },
          [](const HausdorffFunction::Linear& l) {
            return l.slope == 1.0 ? Json("identity") : Json{{"linear", l.slope}};
          },
          [](const HausdorffFunction::Table& t) {
            Json rows = Json::array();
            for (const auto& [r, v] : t.breakpoints) rows.push_back({r, v});
            return Json{{"table", rows}};
          },
          [](const HausdorffFunction::ConstantAfterZero& c) {
            return Json{{"constant_after_zero", c.value}};
          },
      },
      h.kind());
}

Premeasure premeasure_from_json(const Json& j, const PointMeasure& mu) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigParse("premeasure needs a 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "hausdorff") {
    DiamMode mode = DiamMode::kNominal;
    const std::string m = j.value("diam_mode", std::string("nominal"));
    if (m == "realized") {
      mode = DiamMode::kRealized;
    } else if (m != "nominal") {
      throw ConfigParse("diam_mode must be 'nominal' or 'realized'");
    }
    if (!j.contains("h")) throw ConfigParse("hausdorff premeasure needs 'h'");
    return Premeasure::hausdorff(hausdorff_function_from_json(j["h"]), mode);
  }
  if (kind == "measure_power") {
    const Json phi = j.value("phi", Json("identity"));
    return Premeasure::measure_power(mu, number(j, "p"), hausdorff_function_from_json(phi),
                                     number_or(j, "a", 1.0), number_or(j, "b", 1.0));
  }
  if (kind == "constant_nonempty") return Premeasure::constant_nonempty(number(j, "c"));
  throw ConfigParse("unknown premeasure kind '" + kind + "'");
}

RectanglePremeasure rectangle_premeasure_from_json(const Json& j, const PointMeasure& mu_left,
                                                   const PointMeasure& mu_right) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigParse("premeasure needs a 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "product") {
    if (!j.contains("left") || !j.contains("right"))
      throw ConfigParse("product premeasure needs 'left' and 'right'");
    return product_premeasure(premeasure_from_json(j["left"], mu_left),
                              premeasure_from_json(j["right"], mu_right));
  }
  if (kind == "hxh") {
    if (!j.contains("h") || !j.contains("h_prime"))
      throw ConfigParse("hxh premeasure needs 'h' and 'h_prime'");
    return hxh_premeasure(hausdorff_function_from_json(j["h"]),
                          hausdorff_function_from_json(j["h_prime"]));
  }
  throw ConfigParse("unknown rectangle premeasure kind '" + kind + "'");
}

Config config_from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) throw ConfigParse("config must be a JSON object");
  static const std::vector<std::string> known{"instances", "premeasure", "q_grid", "delta_grid",
                                              "suites",    "seed",       "tolerances"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigParse("unknown config key '" + key + "'");
  }
  Config c;
  c.base_dir = base_dir;
  try {
    if (j.contains("instances")) {
      if (!j["instances"].is_array()) throw ConfigParse("'instances' must be an array");
      for (const auto& e : j["instances"]) c.instances.push_back(e);
    }
    if (j.contains("premeasure")) c.premeasure = j["premeasure"];
    if (j.contains("q_grid")) c.q_grid = j["q_grid"].get<std::vector<double>>();
    if (j.contains("delta_grid")) c.delta_grid = j["delta_grid"].get<std::vector<double>>();
    if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tolerances")) {
      const auto& t = j["tolerances"];
      c.tolerances.solver = number_or(t, "solver", c.tolerances.solver);
      c.tolerances.check = number_or(t, "check", c.tolerances.check);
    }
  } catch (const Json::exception& e) {
    throw ConfigParse(std::string("malformed config: ") + e.what());
  }
  return c;
}

Config read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParse("cannot open config " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigParse(path + ": " + e.what());
  }
  return config_from_json(j, std::filesystem::path(path).parent_path().string());
}

Instance generate_instance(const Json& spec) {
  try {
    const std::string gen = spec.at("generator").get<std::string>();
    Instance inst;
    if (gen == "cantor_net") {
      double c = number_or(spec, "c", 1.0 / 3.0);
      if (spec.contains("c_inverse")) c = 1.0 / number(spec, "c_inverse");
      inst = cantor_net(spec.at("level").get<int>(), c, number_or(spec, "p", 0.5));
    } else if (gen == "cycle") {
      inst = cycle_metric(spec.at("n").get<std::size_t>());
    } else if (gen == "uniform_grid") {
      inst = uniform_grid(spec.at("n").get<std::size_t>(), spec.value("d", std::size_t{1}));
    } else if (gen == "random_cloud") {
      inst = random_cloud(spec.at("n").get<std::size_t>(), spec.value("d", std::size_t{1}),
                          spec.value("seed", std::uint64_t{1}));
    } else {
      throw ConfigParse("unknown generator '" + gen + "'");
    }
    if (spec.contains("measure")) {
      const auto& m = spec["measure"];
      if (m.is_object() && m.contains("random")) {
        Rng rng(m["random"].get<std::uint64_t>());
        inst.measure = random_measure(inst.space.size(), rng);
      } else if (m != "uniform" && m != "default") {
        throw ConfigParse("measure must be \"uniform\", \"default\" or {\"random\": seed}");
      } else if (m == "uniform") {
        inst.measure = PointMeasure::uniform(inst.space.size());
      }
    }
    if (spec.contains("target")) {
      std::vector<PointIndex> t;
      for (const auto& p : spec["target"]) t.push_back(lookup(inst.space, p));
      inst.target = std::move(t);
    }
    if (spec.contains("id")) inst.id = spec["id"].get<std::string>();
    return inst;
  } catch (const Json::exception& e) {
    throw ConfigParse(std::string("malformed generator entry: ") + e.what());
  }
}

std::vector<Instance> load_instances(const Config& config) {
  std::vector<Instance> out;
  for (const auto& e : config.instances) {
    if (e.is_string() || (e.is_object() && e.contains("file"))) {
      std::filesystem::path p = e.is_string() ? e.get<std::string>() : e["file"].get<std::string>();
      if (p.is_relative() && !config.base_dir.empty()) p = std::filesystem::path(config.base_dir) / p;
      if (!std::filesystem::exists(p)) throw MissingInstance("instance file not found: " + p.string());
      out.push_back(read_instance(p.string()));
    } else if (e.is_object() && e.contains("generator")) {
      out.push_back(generate_instance(e));
    } else {
      out.push_back(instance_from_json(e));
    }
  }
  return out;
}

std::string csv_number(double v) { return format_number(v); }

}  // namespace mfh
