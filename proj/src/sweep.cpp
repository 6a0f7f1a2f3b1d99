#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "mfh/harness.hpp"

namespace mfh {

std::string family_name(Family f) {
  switch (f) {
    case Family::kH: return "H";
    case Family::kW: return "W";
    case Family::kWtilde: return "Wtilde";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "H") return Family::kH;
  if (name == "W") return Family::kW;
  if (name == "Wtilde") return Family::kWtilde;
  throw ConfigParse("family must be H, W or Wtilde, got '" + name + "'");
}

SweepRow compute_cell(const Instance& instance, const Json& xi_spec, double q, double delta,
                      Family family) {
  SweepRow row;
  row.instance_id = instance.id;
  row.q = q;
  row.delta = delta;
  row.family = family;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Premeasure xi = premeasure_from_json(xi_spec, instance.measure);
    const auto target = instance.target_or_all();
    const auto& s = instance.space;
    const auto& mu = instance.measure;
    CoverStatus status = CoverStatus::kOptimal;
    if (family == Family::kH) {
      const auto sol = hausdorff_premeasure(s, mu, q, xi, target, delta);
      row.value = sol.value;
      row.nodes = sol.nodes;
      status = sol.status;
    } else {
      const auto sol = family == Family::kW
                           ? weighted_premeasure(s, mu, q, xi, target, delta)
                           : noncentered_weighted_premeasure(s, mu, q, xi, target, delta);
      row.value = sol.value;
      row.gap = sol.gap;
      row.nodes = sol.iterations;
      status = sol.status;
    }
    row.status = status == CoverStatus::kOptimal ? "optimal" : "infeasible";
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
    row.value = Extended::infinity();
  }
  row.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<double> default_delta_grid(const FiniteMetricSpace& space) {
  std::vector<double> r{space.epsilon_net()};
  for (PointIndex i = 0; i < space.size(); ++i)
    for (PointIndex j = i + 1; j < space.size(); ++j) r.push_back(space.distance(i, j));
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  if (r.size() > 6) {
    std::vector<double> thin;
    for (std::size_t k = 0; k < 6; ++k) thin.push_back(r[k * (r.size() - 1) / 5]);
    thin.erase(std::unique(thin.begin(), thin.end()), thin.end());
    r = thin;
  }
  std::reverse(r.begin(), r.end());
  return r;
}

std::vector<SweepRow> run_sweep(const std::vector<Instance>& instances, const Json& xi_spec,
                                const SweepOptions& options) {
  struct Cell {
    std::size_t instance;
    double q;
    double delta;
    Family family;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto deltas = options.delta_grid.empty() ? default_delta_grid(instances[i].space)
                                                   : options.delta_grid;
    for (double q : options.q_grid)
      for (double d : deltas)
        for (Family f : options.families) cells.push_back(Cell{i, q, d, f});
  }

  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      const Cell& c = cells[k];
      rows[k] = compute_cell(instances[c.instance], xi_spec, c.q, c.delta, c.family);
      rows[k].instance_order = c.instance;
      if (options.deterministic) rows[k].wall_ms = 0.0;
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, cells.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.instance_order != b.instance_order) return a.instance_order < b.instance_order;
    if (a.q != b.q) return a.q < b.q;
    if (a.delta != b.delta) return a.delta > b.delta;
    return a.family < b.family;
  });
  return rows;
}

std::string csv_header() { return "instance_id,q,delta,family,value,status,gap,nodes,wall_ms"; }

std::string csv_row(const SweepRow& row) {
  std::ostringstream os;
  os << row.instance_id << ',' << csv_number(row.q) << ',' << csv_number(row.delta) << ','
     << family_name(row.family) << ',' << (row.status == "error" ? "nan" : format_number(row.value))
     << ',' << row.status << ',' << csv_number(row.gap) << ',' << row.nodes << ','
     << csv_number(row.wall_ms);
  return os.str();
}

}  // namespace mfh
