// qmem: command-line driver.
//
//   qmem presets
//   qmem run --preset fig4 --exact --out out/fig4
//   qmem scan --preset fig9 --out out/fig9_scan
//   qmem export-qasm --preset fig4 --out fig4.qasm

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmem/config.hpp"
#include "qmem/error.hpp"
#include "qmem/kernels.hpp"
#include "qmem/qasm.hpp"
#include "qmem/runner.hpp"

namespace {

struct Options {
  std::string preset;
  std::string config;
  std::string out;
  std::optional<std::size_t> shots;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> steps_per_period;
  std::optional<std::size_t> periods;
  std::optional<std::string> delta;
  std::vector<std::string> deltas;
  std::vector<std::string> sets;
  bool exact = false;
  bool sampled = false;
  unsigned threads = 0;
};

void add_run_options(CLI::App* cmd, Options& o) {
  auto* p = cmd->add_option("--preset", o.preset, "preset name (see `qmem presets`)");
  auto* c = cmd->add_option("--config", o.config, "key = value configuration file");
  p->excludes(c);
  cmd->add_option("--out", o.out, "output directory (or file for export-qasm)");
  cmd->add_option("--shots", o.shots, "shots per expectation value");
  cmd->add_option("--seed", o.seed, "master seed for sampled mode");
  cmd->add_option("--steps-per-period", o.steps_per_period, "time steps per driving period");
  cmd->add_option("--periods", o.periods, "number of driving periods");
  cmd->add_option("--delta", o.delta, "interaction strength per step (radians, e.g. 0.1 or pi/20)");
  cmd->add_option("--set", o.sets, "extra key=value override (repeatable)");
  auto* e = cmd->add_flag("--exact", o.exact, "exact expectation values");
  auto* s = cmd->add_flag("--sampled", o.sampled, "binomial shot sampling");
  e->excludes(s);
}

qmem::RunConfig build_config(const Options& o) {
  qmem::RunConfig cfg;
  if (!o.config.empty()) {
    cfg = qmem::load_config(o.config);
  } else if (!o.preset.empty()) {
    cfg = qmem::preset(o.preset);
  }
  for (const std::string& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw qmem::ConfigError("--set expects key=value, got '" + kv + "'");
    qmem::set_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.shots) {
    cfg.shots.shots = *o.shots;
    if (!o.exact) cfg.shots.mode = qmem::ShotMode::sampled;
  }
  if (o.seed) cfg.shots.seed = *o.seed;
  if (o.steps_per_period) cfg.steps_per_period = *o.steps_per_period;
  if (o.periods) cfg.periods = *o.periods;
  if (o.delta) cfg.interaction.delta = qmem::parse_angle(*o.delta);
  if (o.exact) cfg.shots.mode = qmem::ShotMode::exact;
  if (o.sampled) cfg.shots.mode = qmem::ShotMode::sampled;
  if (!o.out.empty()) cfg.output_dir = o.out;
  cfg.validate();
  return cfg;
}

int cmd_presets() {
  for (const auto& p : qmem::list_presets()) std::printf("%-11s %s\n", p.name.c_str(), p.description.c_str());
  return 0;
}

int cmd_run(const Options& o) {
  const qmem::RunConfig cfg = build_config(o);
  const qmem::RunResult r = qmem::execute(cfg);
  const auto written = qmem::write_artifacts(r, cfg.output_dir);
  qmem::print_summary(r, std::cout);
  std::cout << "wrote " << written.size() << " files to " << cfg.output_dir << "\n";
  return 0;
}

int cmd_scan(const Options& o) {
  const qmem::RunConfig cfg = build_config(o);
  std::vector<double> deltas;
  for (const std::string& d : o.deltas) deltas.push_back(qmem::parse_angle(d));
  if (deltas.empty()) deltas = qmem::default_scan_deltas();
  const auto rows = qmem::delta_scan(cfg, deltas, std::filesystem::path(cfg.output_dir), o.threads);
  qmem::write_scan_csv(std::cout, rows);
  std::cout << "wrote " << rows.size() << " runs and scan_summary.csv to " << cfg.output_dir << "\n";
  return 0;
}

int cmd_export(const Options& o) {
  const qmem::RunConfig cfg = build_config(o);
  const std::string text = qmem::export_qasm(cfg);
  if (o.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw qmem::IoError("cannot write " + o.out);
  out << text;
  if (!out) throw qmem::IoError("failed writing " + o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digital quantum memristor simulator"};
  app.require_subcommand(1);
  Options o;

  app.add_subcommand("presets", "list the preset catalog");
  auto* run = app.add_subcommand("run", "simulate one configuration and write CSV/SVG artifacts");
  add_run_options(run, o);
  auto* scan = app.add_subcommand("scan", "delta scan of a coupled configuration");
  add_run_options(scan, o);
  scan->add_option("--deltas", o.deltas, "delta values (default: 10 values over [0.05, 0.5])");
  scan->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  auto* qasm = app.add_subcommand("export-qasm", "write the collision circuit as OpenQASM 2.0");
  add_run_options(qasm, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("presets")) return cmd_presets();
    if (app.got_subcommand(run)) return cmd_run(o);
    if (app.got_subcommand(scan)) return cmd_scan(o);
    if (app.got_subcommand(qasm)) return cmd_export(o);
  } catch (const qmem::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qmem::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const qmem::Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
