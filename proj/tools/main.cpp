// Batch front-end: verification suites, config-driven simulations, and the
// built-in demos.  CSV for field data, JSON for reports.  Exit codes:
// 0 pass, 1 check failure, 2 configuration error.

#include <chrono>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Core>

#include "isingq/demos.hpp"
#include "isingq/dirac.hpp"
#include "isingq/ensemble.hpp"
#include "isingq/generator.hpp"
#include "isingq/io.hpp"
#include "isingq/observables.hpp"
#include "isingq/sector.hpp"
#include "isingq/verify.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
}

void write_json_file(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << j.dump(2) << '\n';
}

isingq::VerifyGeometry parse_geometry(const std::string& name) {
  if (name == "tiny") return isingq::VerifyGeometry::Tiny;
  if (name == "small") return isingq::VerifyGeometry::Small;
  throw ConfigError("unknown geometry: " + name + " (expected tiny or small)");
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& suite, const std::string& geometry_name, std::uint64_t seed,
               const std::string& out_dir) {
  const isingq::VerifyGeometry geometry = parse_geometry(geometry_name);
  const auto checks = suite == "all" ? isingq::run_verify_all(geometry, seed)
                                     : isingq::run_verify_suite(suite, geometry, seed);
  json report = json::array();
  bool all_pass = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name
              << "  measured=" << isingq::format_double(c.measured)
              << " tolerance=" << isingq::format_double(c.tolerance) << '\n';
    report.push_back({{"suite", c.suite},
                      {"check", c.name},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
    all_pass = all_pass && c.pass;
  }
  std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << '\n';
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_json_file(fs::path(out_dir) / "verify_report.json",
                    {{"suite", suite},
                     {"geometry", geometry_name},
                     {"seed", seed},
                     {"pass", all_pass},
                     {"checks", report}});
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- simulate

int simulate_two_state(const json& cfg, const fs::path& out, json& summary) {
  isingq::TwoStateConfig c;
  c.omega = cfg.value("omega", c.omega);
  c.alpha = cfg.value("alpha", c.alpha);
  c.periods = cfg.value("periods", c.periods);
  c.samples_per_period = cfg.value("samples_per_period", c.samples_per_period);
  const isingq::TwoStateResult run = isingq::run_two_state(c);

  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < run.times.size(); ++i) {
    rows.push_back({run.times[i], run.q0[i], run.q1[i], run.p0[i], double(run.s0[i])});
  }
  isingq::write_csv((out / "trajectory.csv").string(), {"t", "q0", "q1", "p0", "s0"}, rows);
  summary["config"] = {{"scenario", "two-state"},
                       {"omega", c.omega},
                       {"alpha", c.alpha},
                       {"periods", c.periods},
                       {"samples_per_period", c.samples_per_period}};
  summary["max_error"] = run.max_error;
  return 0;
}

struct SectorScenario {
  isingq::LatticeGeometry geometry;
  isingq::ModelParams params;
};

SectorScenario sector_scenario(const json& cfg) {
  SectorScenario s;
  const int sites = cfg.value("sites", 16);
  s.geometry = isingq::LatticeGeometry::line(sites, cfg.value("delta", 0.5));
  s.params.num_species = cfg.value("num_species", 8);
  s.params.mass = cfg.value("mass", 0.7);
  s.params.coupling = cfg.value("coupling", 0.5);
  const double a0 = cfg.value("a0_amplitude", 0.3);
  if (s.params.coupling != 0.0) {
    s.params.A0.resize(sites);
    for (int i = 0; i < sites; ++i) s.params.A0[i] = a0 * std::sin(2.0 * M_PI * i / sites);
  }
  s.params.validate(s.geometry);
  return s;
}

int simulate_sector_evolution(const json& cfg, const fs::path& out, json& summary) {
  const SectorScenario s = sector_scenario(cfg);
  const int sites = s.geometry.num_sites();
  const int B = isingq::num_variables(s.geometry, s.params);
  const double t_final = cfg.value("t_final", 2.0);
  const int frames = cfg.value("frames", 9);
  const double width = cfg.value("packet_width", sites / 6.0);

  // Gaussian packet on flavor 0, species 0
  Eigen::VectorXd amps = Eigen::VectorXd::Zero(B);
  for (int site = 0; site < sites; ++site) {
    const double x = site - sites / 2.0;
    amps[isingq::variable_index(s.geometry, s.params, {0, site, 0})] =
        std::exp(-x * x / (4.0 * width * width));
  }
  amps.normalize();

  const isingq::SectorBasis basis(B, 1);
  const isingq::SparseMatrixD K = isingq::build_generator_sector(s.geometry, s.params, basis);
  Eigen::VectorXd state = isingq::one_particle_state(basis, amps, isingq::VacuumKind::Empty);

  std::vector<std::vector<double>> rows;
  const double seg = t_final / (frames - 1);
  for (int f = 0; f < frames; ++f) {
    const double t = f * seg;
    const Eigen::VectorXd a = isingq::extract_one_particle(basis, state, isingq::VacuumKind::Empty);
    for (int site = 0; site < sites; ++site) {
      double w = 0.0;
      for (int flavor = 0; flavor < s.params.num_species / 4; ++flavor) {
        for (int sp = 0; sp < 4; ++sp) {
          const double q = a[isingq::variable_index(s.geometry, s.params, {flavor, site, sp})];
          w += q * q;
        }
      }
      rows.push_back({t, double(site), s.geometry.coordinate(site, 2), w});
    }
    if (f + 1 < frames) state = isingq::evolve(state, K, seg);
  }
  isingq::write_csv((out / "density.csv").string(), {"t", "site", "x", "w"}, rows);
  isingq::write_matrix_coordinate((out / "generator.mtx").string(), K);
  summary["config"] = {{"scenario", "sector-evolution"}, {"sites", sites},
                       {"num_species", s.params.num_species}, {"mass", s.params.mass},
                       {"coupling", s.params.coupling}, {"t_final", t_final},
                       {"frames", frames}, {"packet_width", width},
                       {"delta", s.geometry.delta}};
  summary["norm_drift"] = std::abs(state.norm() - 1.0);
  return 0;
}

int simulate_crosscheck(const json& cfg, std::uint64_t seed, json& summary) {
  const int sites = cfg.value("sites", 16);
  const int trials = cfg.value("trials", 5);
  const double t = cfg.value("t", 1.0);
  isingq::Grid grid = isingq::Grid::line(sites, cfg.value("dx", 1.0));
  isingq::HamiltonianSpec spec;
  spec.mass = cfg.value("mass", 0.7);
  spec.coupling = cfg.value("coupling", 0.5);
  const double a0 = cfg.value("a0_amplitude", 0.3);
  if (spec.coupling != 0.0) {
    spec.A0.resize(sites);
    for (int i = 0; i < sites; ++i) spec.A0[i] = a0 * std::sin(2.0 * M_PI * i / sites);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    isingq::DiracField field;
    field.grid = grid;
    field.phi.resize(4 * sites);
    for (int i = 0; i < field.phi.size(); ++i) {
      field.phi[i] = std::complex<double>(gauss(rng), gauss(rng));
    }
    field.phi /= field.phi.norm() * std::sqrt(grid.dx);
    worst = std::max(worst, isingq::crosscheck_sector(field, spec, t));
  }
  summary["config"] = {{"scenario", "crosscheck"}, {"sites", sites}, {"trials", trials},
                       {"t", t},   {"dx", grid.dx},
                       {"mass", spec.mass}, {"coupling", spec.coupling},
                       {"a0_amplitude", a0}};
  summary["max_deviation"] = worst;
  return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir, std::uint64_t seed) {
  const json cfg = load_config(config_path);
  if (!cfg.contains("scenario")) throw ConfigError("config needs a \"scenario\" field");
  const std::string scenario = cfg["scenario"];
  const fs::path out(out_dir);
  fs::create_directories(out);

  json summary;
  summary["seed"] = seed;
  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  if (scenario == "two-state") {
    rc = simulate_two_state(cfg, out, summary);
  } else if (scenario == "sector-evolution") {
    rc = simulate_sector_evolution(cfg, out, summary);
  } else if (scenario == "crosscheck") {
    rc = simulate_crosscheck(cfg, seed, summary);
  } else {
    throw ConfigError("unknown scenario: " + scenario);
  }
  summary["runtime"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                           .count();
  write_json_file(out / "summary.json", summary);
  return rc;
}

// -------------------------------------------------------------------- demo

json tunneling_config_json(const isingq::TunnelingConfig& c) {
  return {{"sites", c.sites},       {"length", c.length},
          {"mass", c.mass},         {"momentum", c.momentum},
          {"packet_center", c.packet_center}, {"packet_width", c.packet_width},
          {"barrier_center", c.barrier_center}, {"barrier_width", c.barrier_width},
          {"barrier_height", c.barrier_height}, {"t_final", c.t_final},
          {"dt", c.dt},             {"num_frames", c.num_frames}};
}

int demo_tunneling(const json& cfg, const fs::path& out, json& summary) {
  isingq::TunnelingConfig c;
  c.sites = cfg.value("sites", c.sites);
  c.length = cfg.value("length", c.length);
  c.mass = cfg.value("mass", c.mass);
  c.momentum = cfg.value("momentum", c.momentum);
  c.packet_center = cfg.value("packet_center", c.packet_center);
  c.packet_width = cfg.value("packet_width", c.packet_width);
  c.barrier_center = cfg.value("barrier_center", c.barrier_center);
  c.barrier_width = cfg.value("barrier_width", c.barrier_width);
  c.barrier_height = cfg.value("barrier_height", c.barrier_height);
  c.t_final = cfg.value("t_final", c.t_final);
  c.dt = cfg.value("dt", c.dt);
  c.num_frames = cfg.value("num_frames", c.num_frames);
  const isingq::TunnelingResult run = isingq::run_tunneling(c);

  std::vector<std::vector<double>> rows;
  for (const auto& frame : run.frames) {
    for (int j = 0; j < run.model.n; ++j) {
      rows.push_back({frame.time, j * run.model.dx, frame.density[j]});
    }
  }
  isingq::write_csv((out / "density.csv").string(), {"t", "x", "w"}, rows);
  summary["config"] = tunneling_config_json(c);
  summary["T"] = run.transmission;
  summary["T_analytic"] = run.transmission_analytic;
  summary["norm_drift"] = run.norm_drift;
  return 0;
}

int demo_double_slit(const json& cfg, const fs::path& out, json& summary) {
  isingq::DoubleSlitConfig c;
  c.nx = cfg.value("nx", c.nx);
  c.ny = cfg.value("ny", c.ny);
  c.dx = cfg.value("dx", c.dx);
  c.mass = cfg.value("mass", c.mass);
  c.momentum = cfg.value("momentum", c.momentum);
  c.packet_center_x = cfg.value("packet_center_x", c.packet_center_x);
  c.packet_width_x = cfg.value("packet_width_x", c.packet_width_x);
  c.packet_width_y = cfg.value("packet_width_y", c.packet_width_y);
  c.barrier_x = cfg.value("barrier_x", c.barrier_x);
  c.barrier_cells = cfg.value("barrier_cells", c.barrier_cells);
  c.barrier_height = cfg.value("barrier_height", c.barrier_height);
  c.slit_width_cells = cfg.value("slit_width_cells", c.slit_width_cells);
  c.slit_separation_cells = cfg.value("slit_separation_cells", c.slit_separation_cells);
  c.second_slit_open = cfg.value("second_slit_open", c.second_slit_open);
  c.t_final = cfg.value("t_final", c.t_final);
  c.dt = cfg.value("dt", c.dt);
  c.num_frames = cfg.value("num_frames", c.num_frames);
  const isingq::DoubleSlitResult run = isingq::run_double_slit(c);

  std::vector<std::vector<double>> rows;
  for (const auto& frame : run.frames) {
    for (int x = 0; x < c.nx; x += 2) {
      for (int y = 0; y < c.ny; y += 2) {
        rows.push_back({frame.time, x * c.dx, y * c.dx, frame.density[run.model.site(x, y)]});
      }
    }
  }
  isingq::write_csv((out / "density.csv").string(), {"t", "x", "y", "w"}, rows);
  std::vector<std::vector<double>> det;
  for (int y = 0; y < c.ny; ++y) det.push_back({y * c.dx, run.detector_profile[y]});
  isingq::write_csv((out / "detector.csv").string(), {"y", "w"}, det);
  summary["config"] = {{"nx", c.nx},   {"ny", c.ny}, {"dx", c.dx}, {"mass", c.mass},
                       {"momentum", c.momentum}, {"packet_center_x", c.packet_center_x},
                       {"packet_width_x", c.packet_width_x}, {"packet_width_y", c.packet_width_y},
                       {"barrier_x", c.barrier_x}, {"barrier_cells", c.barrier_cells},
                       {"barrier_height", c.barrier_height},
                       {"slit_width_cells", c.slit_width_cells},
                       {"slit_separation_cells", c.slit_separation_cells},
                       {"second_slit_open", c.second_slit_open},
                       {"t_final", c.t_final}, {"dt", c.dt}, {"num_frames", c.num_frames}};
  summary["contrast"] = run.contrast;
  summary["central_maxima"] = run.central_maxima;
  summary["norm_drift"] = run.norm_drift;
  return 0;
}

int cmd_demo(const std::string& name, const std::string& config_path, const std::string& out_dir) {
  const json cfg = load_config(config_path);
  const fs::path out(out_dir);
  fs::create_directories(out);
  json summary;
  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  if (name == "two-state") {
    rc = simulate_two_state(cfg, out, summary);
  } else if (name == "tunneling") {
    rc = demo_tunneling(cfg, out, summary);
  } else if (name == "double-slit") {
    rc = demo_double_slit(cfg, out, summary);
  } else {
    throw ConfigError("unknown demo: " + name);
  }
  summary["runtime"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                           .count();
  write_json_file(out / "summary.json", summary);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("ISINGQ_THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) Eigen::setNbThreads(n);
  }

  CLI::App app{"classical-ensemble quantum dynamics laboratory"};
  app.require_subcommand(1);

  std::string suite = "all", geometry = "small", config_path, out_dir, demo_name;
  std::uint64_t seed = 12345;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--geometry", geometry, "tiny or small");
  verify->add_option("--seed", seed, "seed for randomized property checks");
  verify->add_option("--out", out_dir, "directory for the JSON report");

  CLI::App* simulate = app.add_subcommand("simulate", "run a scenario from a config file");
  simulate->add_option("--config", config_path, "JSON scenario config")->required();
  simulate->add_option("--out", out_dir, "output directory")->required();
  simulate->add_option("--seed", seed, "random seed");

  CLI::App* demo = app.add_subcommand("demo", "run a built-in demo");
  demo->add_option("name", demo_name, "double-slit | tunneling | two-state")->required();
  demo->add_option("--config", config_path, "JSON overrides for the defaults");
  demo->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(suite, geometry, seed, out_dir);
    if (simulate->parsed()) return cmd_simulate(config_path, out_dir, seed);
    if (demo->parsed()) return cmd_demo(demo_name, config_path, out_dir);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
