// mfh: command-line front end for pre-measure computation and verification suites.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "mfh/covering.hpp"
#include "mfh/diagnostics.hpp"
#include "mfh/harness.hpp"
#include "mfh/io.hpp"

using namespace mfh;

namespace {

/// Writes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Json premeasure_spec(const std::string& inline_json, const std::string& config_path) {
  if (!inline_json.empty()) {
    try {
      return Json::parse(inline_json);
    } catch (const Json::parse_error& e) {
      throw ConfigParse(std::string("--premeasure: ") + e.what());
    }
  }
  if (!config_path.empty()) return read_config(config_path).premeasure;
  return Config{}.premeasure;
}

Instance load_one(const std::string& path) {
  if (!std::filesystem::exists(path)) throw MissingInstance("instance file not found: " + path);
  return read_instance(path);
}

std::vector<double> radii_or_default(std::vector<double> radii, const FiniteMetricSpace& space) {
  if (radii.empty()) radii = default_delta_grid(space);
  std::sort(radii.begin(), radii.end());
  return radii;
}

int cmd_gen(const std::string& config_path, const std::string& out_dir) {
  const Config cfg = read_config(config_path);
  std::filesystem::create_directories(out_dir);
  for (const auto& inst : load_instances(cfg)) {
    const auto path = (std::filesystem::path(out_dir) / (inst.id + ".json")).string();
    write_instance(inst, path);
    std::cout << path << '\n';
  }
  return 0;
}

int cmd_verify(std::vector<std::string> suites, const std::string& config_path,
               SuiteOptions options, bool seed_given, bool tol_given, const std::string& out) {
  if (!config_path.empty()) {
    const Config cfg = read_config(config_path);
    if (suites.empty()) suites = cfg.suites;
    if (!seed_given) options.seed = cfg.seed;
    if (!tol_given) options.tolerances.check = cfg.tolerances.check;
    options.tolerances.solver = cfg.tolerances.solver;
  }
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
  Output o(out);
  bool ok = true;
  for (const auto& name : suites) {
    const SuiteReport rep = run_suite(name, options);
    o.stream() << format_report(rep);
    ok = ok && rep.passed();
  }
  return ok ? 0 : 1;
}

int cmd_diag(const Instance& inst, const std::string& kind, const Json& xi_spec, double a,
             std::vector<double> radii, double q, double delta, const std::string& point,
             std::size_t tail, const std::string& out) {
  Output o(out);
  auto& os = o.stream();
  os << "instance_id,kind,parameter,value\n";
  const auto& s = inst.space;
  const auto& mu = inst.measure;
  if (kind == "blanketing") {
    radii = radii_or_default(radii, s);
    os << inst.id << ",blanketing,a=" << format_number(a) << ','
       << format_number(blanketing_ratio(s, mu, a, radii)) << '\n';
  } else if (kind == "doubling") {
    radii = radii_or_default(radii, s);
    const Premeasure xi = premeasure_from_json(xi_spec, mu);
    os << inst.id << ",doubling,grid=" << radii.size() << ','
       << format_number(premeasure_doubling(s, xi, radii)) << '\n';
  } else if (kind == "density-profile") {
    radii = radii_or_default(radii, s);
    const Premeasure xi = premeasure_from_json(xi_spec, mu);
    const auto x = s.index_of(point);
    if (!x) throw Error("unknown point '" + point + "'");
    const auto prof = upper_density_profile(s, mu, q, xi, mu, *x, radii, tail);
    for (std::size_t k = 0; k < prof.radii.size(); ++k)
      os << inst.id << ",density_ratio,r=" << format_number(prof.radii[k]) << ','
         << format_number(prof.ratios[k]) << '\n';
    os << inst.id << ",upper_density,x=" << point << ',' << format_number(prof.upper_density)
       << '\n';
  } else if (kind == "density-check") {
    const Premeasure xi = premeasure_from_json(xi_spec, mu);
    const auto rep = density_upper_bound_check(s, mu, q, xi, mu, inst.target_or_all(), delta);
    os << inst.id << ",nu_E,delta=" << format_number(delta) << ',' << format_number(rep.nu_target) << '\n'
       << inst.id << ",s,delta=" << format_number(delta) << ',' << format_number(rep.s) << '\n'
       << inst.id << ",H,delta=" << format_number(delta) << ',' << format_number(rep.h_value) << '\n'
       << inst.id << ",bound,delta=" << format_number(delta) << ',' << format_number(rep.bound) << '\n'
       << inst.id << ",holds,delta=" << format_number(delta) << ',' << (rep.holds ? 1 : 0) << '\n';
    return rep.holds ? 0 : 1;
  } else {
    throw Error("unknown diagnostic '" + kind + "' (blanketing, doubling, density-profile, density-check)");
  }
  return 0;
}

std::string ball_text(const FiniteMetricSpace& s, const Ball& b) {
  return "B(" + s.ids()[b.center] + ", " + format_number(b.radius) + ")";
}

int cmd_covering(const Instance& inst, const std::string& algorithm, const Json& xi_spec,
                 double q, double delta, const std::string& out) {
  Output o(out);
  auto& os = o.stream();
  const auto& s = inst.space;
  const auto target = inst.target_or_all();
  if (algorithm == "vitali") {
    const auto balls = enumerate_centered_balls(s, target, delta);
    const auto pack = vitali_5r_packing(s, balls);
    const auto check = check_vitali(s, balls, pack);
    os << "vitali " << inst.id << " delta=" << format_number(delta) << " balls=" << balls.size()
       << " chosen=" << pack.chosen.size() << '\n';
    for (auto c : pack.chosen) os << "chosen " << ball_text(s, balls[c]) << '\n';
    for (std::size_t i = 0; i < balls.size(); ++i)
      os << "blocker " << ball_text(s, balls[i]) << " -> " << ball_text(s, balls[pack.blocker[i]]) << '\n';
    os << "check disjoint=" << check.disjoint << " blockers=" << check.blockers_valid
       << " covered_by_5r=" << check.covered_by_5r << '\n';
    for (const auto& p : check.problems) os << "problem " << p << '\n';
    return check.ok() ? 0 : 1;
  }
  if (algorithm == "besicovitch") {
    const auto fam = besicovitch_families(s, target, std::vector<double>(target.size(), delta));
    const auto check = check_besicovitch(s, target, fam);
    os << "besicovitch " << inst.id << " radius=" << format_number(delta)
       << " families=" << fam.count() << '\n';
    for (std::size_t f = 0; f < fam.families.size(); ++f) {
      os << "family " << f << ':';
      for (const auto& b : fam.families[f]) os << ' ' << ball_text(s, b);
      os << '\n';
    }
    os << "check disjoint_within=" << check.disjoint_within
       << " centers_covered=" << check.centers_covered << '\n';
    for (const auto& p : check.problems) os << "problem " << p << '\n';
    return check.ok() ? 0 : 1;
  }
  if (algorithm == "subfamily3r") {
    const Premeasure xi = premeasure_from_json(xi_spec, inst.measure);
    const auto cover = centered_instance(s, inst.measure, q, xi, target, delta);
    const auto lp = solve_fractional_cover(cover.problem);
    if (lp.value.is_infinite()) throw Error("no finite weighted cover exists at this delta");
    std::vector<Ball> balls;
    for (const auto& c : cover.candidates) balls.push_back(std::get<Ball>(c));
    const auto red = subfamily_3r_reduction(s, balls, lp.weights, inst.measure, q, xi, target);
    os << "subfamily3r " << inst.id << " q=" << format_number(q) << " delta=" << format_number(delta)
       << " W=" << format_number(lp.value) << '\n';
    for (auto i : red.indices) os << "selected " << ball_text(s, balls[i]) << '\n';
    os << "subfamily_cost=" << format_number(red.subfamily_cost)
       << " weighted_cost=" << format_number(red.weighted_cost)
       << " ratio=" << format_number(red.ratio) << '\n';
    return 0;
  }
  throw Error("unknown covering algorithm '" + algorithm + "' (vitali, besicovitch, subfamily3r)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Hausdorff and weighted pre-measures on finite metric spaces"};
  app.require_subcommand(1);

  std::string config_path, out_path, instance_path, premeasure_json, family = "W", kind,
      algorithm, point = "0";
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  std::size_t jobs = 1, cases = 0, tail = 3;
  double tolerance = 1e-7, q = 1.0, delta = 0.0, a = 2.0;
  bool deterministic = false;
  std::vector<std::string> suites;
  std::vector<double> radii;

  auto* gen = app.add_subcommand("gen", "Write the configured instances as instance files");
  gen->add_option("--config", config_path, "Run configuration")->required();
  gen->add_option("--out", out_dir, "Output directory (default: current directory)");

  auto* compute = app.add_subcommand("compute", "One value row for an instance");
  compute->add_option("--instance", instance_path, "Instance file")->required();
  compute->add_option("--q", q, "Exponent q")->required();
  compute->add_option("--delta", delta, "Scale delta")->required();
  compute->add_option("--family", family, "H, W or Wtilde")->default_val("W");
  compute->add_option("--premeasure", premeasure_json, "Premeasure JSON");
  compute->add_option("--config", config_path, "Take the premeasure from this configuration");
  compute->add_option("--out", out_path, "CSV output file");

  auto* sweep = app.add_subcommand("sweep", "Grid of values over instances, q and delta");
  sweep->add_option("--config", config_path, "Run configuration")->required();
  sweep->add_option("--out", out_path, "CSV output file");
  sweep->add_option("--jobs", jobs, "Worker threads")->default_val(1);
  sweep->add_flag("--deterministic", deterministic, "Report wall_ms as 0");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suites, "Suite name (repeatable, or 'all')");
  verify->add_option("--config", config_path, "Run configuration");
  auto* seed_opt = verify->add_option("--seed", seed, "Corpus seed");
  verify->add_option("--cases", cases, "Cases per corpus (0: suite default)");
  auto* tol_opt = verify->add_option("--tolerance", tolerance, "Cross-instance check tolerance");
  verify->add_option("--out", out_path, "Report file");

  auto* diag = app.add_subcommand("diag", "Diagnostics: blanketing, doubling, densities");
  diag->add_option("--instance", instance_path, "Instance file")->required();
  diag->add_option("--kind", kind, "blanketing | doubling | density-profile | density-check")->required();
  diag->add_option("--premeasure", premeasure_json, "Premeasure JSON");
  diag->add_option("--config", config_path, "Take the premeasure from this configuration");
  diag->add_option("--a", a, "Blanketing factor")->default_val(2.0);
  diag->add_option("--radii", radii, "Radius grid")->delimiter(',');
  diag->add_option("--q", q, "Exponent q")->default_val(1.0);
  diag->add_option("--delta", delta, "Scale delta for density-check");
  diag->add_option("--point", point, "Point id for density-profile")->default_val("0");
  diag->add_option("--tail", tail, "Smallest radii used for the density surrogate")->default_val(3);
  diag->add_option("--out", out_path, "CSV output file");

  auto* covering = app.add_subcommand("covering", "Covering algorithms with certificates");
  covering->add_option("--instance", instance_path, "Instance file")->required();
  covering->add_option("--algorithm", algorithm, "vitali | besicovitch | subfamily3r")->required();
  covering->add_option("--delta", delta, "Radius bound (vitali, subfamily3r) or radius (besicovitch)")
      ->required();
  covering->add_option("--q", q, "Exponent q (subfamily3r)")->default_val(1.0);
  covering->add_option("--premeasure", premeasure_json, "Premeasure JSON (subfamily3r)");
  covering->add_option("--out", out_path, "Output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(config_path, out_dir);

    if (compute->parsed()) {
      const Instance inst = load_one(instance_path);
      const SweepRow row = compute_cell(inst, premeasure_spec(premeasure_json, config_path), q,
                                        delta, parse_family(family));
      Output o(out_path);
      o.stream() << csv_header() << '\n' << csv_row(row) << '\n';
      if (row.status == "error") {
        std::cerr << "error: instance=" << inst.id << " q=" << format_number(q)
                  << " delta=" << format_number(delta) << ": " << row.error << '\n';
        return 2;
      }
      return 0;
    }

    if (sweep->parsed()) {
      const Config cfg = read_config(config_path);
      const auto instances = load_instances(cfg);
      SweepOptions opts;
      opts.q_grid = cfg.q_grid;
      opts.delta_grid = cfg.delta_grid;
      opts.jobs = jobs;
      opts.deterministic = deterministic;
      const auto rows = run_sweep(instances, cfg.premeasure, opts);
      Output o(out_path);
      o.stream() << csv_header() << '\n';
      int status = 0;
      for (const auto& r : rows) {
        o.stream() << csv_row(r) << '\n';
        if (r.status == "error") {
          std::cerr << "error: instance=" << r.instance_id << " q=" << format_number(r.q)
                    << " delta=" << format_number(r.delta) << " family=" << family_name(r.family)
                    << ": " << r.error << '\n';
          status = 2;
        }
      }
      return status;
    }

    if (verify->parsed()) {
      SuiteOptions opts;
      opts.seed = seed;
      opts.cases = cases;
      opts.tolerances.check = tolerance;
      return cmd_verify(suites, config_path, opts, seed_opt->count() > 0, tol_opt->count() > 0,
                        out_path);
    }

    if (diag->parsed()) {
      const Instance inst = load_one(instance_path);
      return cmd_diag(inst, kind, premeasure_spec(premeasure_json, config_path), a, radii, q,
                      delta, point, tail, out_path);
    }

    if (covering->parsed()) {
      const Instance inst = load_one(instance_path);
      return cmd_covering(inst, algorithm, premeasure_spec(premeasure_json, ""), q, delta,
                          out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
