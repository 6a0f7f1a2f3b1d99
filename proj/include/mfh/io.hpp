#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "mfh/generators.hpp"
#include "mfh/premeasure.hpp"

namespace mfh {

using Json = nlohmann::json;

/// Instance file:
///   {"id": "...", "points": [ids], "dist": [[...]] and/or "coords": [[...]],
///    "measure": {id: mass}, "epsilon_net": x, "target": [ids]}
/// "id" and "target" are optional; points missing from "measure" get mass 0.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);
Instance read_instance(const std::string& path);
void write_instance(const Instance& inst, const std::string& path);

/// {"power": s} | {"linear": k} | "identity" | {"table": [[r, v], ...]} |
/// {"constant_after_zero": c}
HausdorffFunction hausdorff_function_from_json(const Json& j);
Json hausdorff_function_to_json(const HausdorffFunction& h);

/// {"kind": "hausdorff", "h": ..., "diam_mode": "nominal" | "realized"}
/// {"kind": "measure_power", "p": p, "phi": ..., "a": a, "b": b}   (uses mu)
/// {"kind": "constant_nonempty", "c": c}
Premeasure premeasure_from_json(const Json& j, const PointMeasure& mu);

/// {"kind": "product", "left": premeasure, "right": premeasure}
/// {"kind": "hxh", "h": ..., "h_prime": ...}
RectanglePremeasure rectangle_premeasure_from_json(const Json& j, const PointMeasure& mu_left,
                                                   const PointMeasure& mu_right);

struct Tolerances {
  double solver = 1e-9;
  double check = 1e-7;
};

/// Run configuration. Each entry of `instances` is a file reference {"file": path}, a
/// generator {"generator": "cantor_net" | "cycle" | "uniform_grid" | "random_cloud", ...}
/// or an inline instance object.
struct Config {
  std::vector<Json> instances;
  Json premeasure = Json{{"kind", "hausdorff"}, {"h", "identity"}, {"diam_mode", "nominal"}};
  std::vector<double> q_grid{-1.0, 0.0, 0.5, 1.0, 2.0};
  std::vector<double> delta_grid;
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  Tolerances tolerances;
  std::string base_dir;  // relative instance files resolve against this
};

/// Throws ConfigParse on malformed input.
Config config_from_json(const Json& j, const std::string& base_dir = "");
Config read_config(const std::string& path);

/// Materializes every instance entry. Throws MissingInstance for unreadable files.
std::vector<Instance> load_instances(const Config& config);

/// Builds one instance from a generator entry.
Instance generate_instance(const Json& spec);

/// CSV field text: "inf" for infinity, shortest round-trip decimal otherwise.
std::string csv_number(double v);

}  // namespace mfh
