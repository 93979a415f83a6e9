#include "qmem/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

#include "qmem/error.hpp"
#include "qmem/report.hpp"
#include "qmem/svg.hpp"

namespace qmem {

namespace fs = std::filesystem;

double RunResult::max_pinch(std::size_t memristor) const {
  double best = 0.0;
  for (const LoopMetrics& m : metrics.at(memristor)) best = std::max(best, m.pinch_distance);
  return best;
}

double RunResult::mean_form_factor(std::size_t memristor) const {
  const auto& ms = metrics.at(memristor);
  if (ms.empty()) return 0.0;
  double sum = 0.0;
  for (const LoopMetrics& m : ms) sum += m.form_factor;
  return sum / static_cast<double>(ms.size());
}

std::size_t RunResult::count(EntanglementEvent::Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(events.begin(), events.end(), [kind](const EntanglementEvent& e) { return e.kind == kind; }));
}

RunResult execute(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.grid().step_count() < 2) throw ConfigError("a run needs at least 2 steps (3 samples) for the current");
  RunResult r;
  r.config = cfg;
  const TimeGrid grid = cfg.grid();
  if (cfg.mode == RunMode::single) {
    const Trajectory traj = run_single(cfg.init1, cfg.profile(0), grid);
    r.trace = observe_single(traj, cfg.profile(0), grid, cfg.shots, cfg.units());
  } else {
    const Trajectory traj = run_coupled(cfg.init1, cfg.init2, cfg.profile(0), cfg.profile(1), grid, cfg.interaction);
    r.trace = observe_coupled(traj, cfg.profile(0), cfg.profile(1), grid, cfg.shots, cfg.units());
    r.trace.concurrence.reserve(traj.size());
    for (const auto& s : traj) r.trace.concurrence.push_back(concurrence(s.rho));
    r.events = entanglement_events(r.trace.t, r.trace.concurrence);
  }
  for (const QubitSeries& s : r.trace.qubits) {
    LoopSplit split = split_loops(s, grid);
    std::vector<LoopMetrics> ms;
    ms.reserve(split.loops.size());
    for (const HysteresisLoop& loop : split.loops) ms.push_back(loop_metrics(loop));
    r.loops.push_back(std::move(split));
    r.metrics.push_back(std::move(ms));
  }
  return r;
}

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

template <typename F>
void write_with(const fs::path& path, F&& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  f(out);
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<double> scaled(const std::vector<double>& v, Normalization norm) {
  double ref = 0.0;
  if (norm == Normalization::initial && !v.empty()) ref = std::abs(v.front());
  if (ref < 1e-12) {
    for (double x : v) ref = std::max(ref, std::abs(x));
  }
  std::vector<double> out(v);
  if (ref > 0.0) {
    for (double& x : out) x /= ref;
  }
  return out;
}

std::string suffix(std::size_t q) { return "_" + std::to_string(q + 1); }

}  // namespace

std::vector<fs::path> write_artifacts(const RunResult& r, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  std::vector<fs::path> written;
  const fs::path cfg_path = dir / "config.txt";
  write_text(cfg_path, serialize_config(r.config));
  written.push_back(cfg_path);

  const fs::path trace_path = dir / "trace.csv";
  write_with(trace_path, [&](std::ostream& os) { write_trace_csv(os, r.trace); });
  written.push_back(trace_path);

  const Normalization norm = r.config.plot_normalization;
  const std::string norm_label = norm == Normalization::initial ? "initial value" : "maximum";
  for (std::size_t q = 0; q < r.trace.qubits.size(); ++q) {
    const QubitSeries& s = r.trace.qubits[q];
    const fs::path metrics_path = dir / (q == 0 ? "metrics.csv" : "metrics" + suffix(q) + ".csv");
    write_with(metrics_path, [&](std::ostream& os) { write_metrics_csv(os, r.metrics[q]); });
    written.push_back(metrics_path);

    const std::vector<double> v = scaled(s.V, norm);
    const std::vector<double> i = scaled(s.I, norm);

    svg::Plot ts;
    ts.title = r.config.name + ": memristor " + std::to_string(q + 1);
    ts.xlabel = "t";
    ts.ylabel = "V, I (normalized to " + norm_label + ")";
    ts.series.push_back({"V", r.trace.t, v, svg::palette(0)});
    ts.series.push_back({"I", r.trace.t, i, svg::palette(1)});
    const fs::path ts_path = dir / ("timeseries" + suffix(q) + ".svg");
    write_text(ts_path, svg::render(ts));
    written.push_back(ts_path);

    svg::Plot iv;
    iv.title = r.config.name + ": I-V, memristor " + std::to_string(q + 1);
    iv.xlabel = "V";
    iv.ylabel = "I";
    iv.series.push_back({"", v, i, svg::palette(0)});
    iv.markers.push_back({0.0, 0.0, "origin"});
    const fs::path iv_path = dir / ("iv" + suffix(q) + ".svg");
    write_text(iv_path, svg::render(iv));
    written.push_back(iv_path);
  }

  if (r.trace.qubits.size() == 2) {
    svg::Plot cf;
    cf.title = r.config.name + ": concurrence and form factor";
    cf.xlabel = "t";
    cf.ylabel = "C, F";
    cf.series.push_back({"concurrence", r.trace.t, r.trace.concurrence, svg::palette(2)});
    const double period = r.config.grid().period();
    for (std::size_t q = 0; q < 2; ++q) {
      svg::Series f;
      f.label = "F memristor " + std::to_string(q + 1);
      f.color = svg::palette(q);
      for (std::size_t p = 0; p < r.metrics[q].size(); ++p) {
        f.x.push_back((static_cast<double>(p) + 0.5) * period);
        f.y.push_back(r.metrics[q][p].form_factor);
      }
      cf.series.push_back(std::move(f));
    }
    const fs::path cf_path = dir / "concurrence_formfactor.svg";
    write_text(cf_path, svg::render(cf));
    written.push_back(cf_path);
  }
  return written;
}

void print_summary(const RunResult& r, std::ostream& os) {
  const RunConfig& c = r.config;
  os << "run " << c.name << " (" << run_mode_name(c.mode) << ", " << shot_mode_name(c.shots.mode);
  if (c.mode == RunMode::coupled) os << ", " << c.interaction.describe();
  os << ")\n";
  if (!c.note.empty()) os << "note: " << c.note << "\n";
  os << "steps " << c.grid().step_count() << ", dt " << format_value(c.grid().dt()) << "\n";
  for (std::size_t q = 0; q < r.metrics.size(); ++q) {
    os << "memristor " << q + 1 << ":\n";
    os << "  period          S              P              F              pinch\n";
    for (std::size_t p = 0; p < r.metrics[q].size(); ++p) {
      const LoopMetrics& m = r.metrics[q][p];
      char line[160];
      std::snprintf(line, sizeof line, "  %-6zu %14.6g %14.6g %14.6g %14.6g\n", p, m.area, m.perimeter, m.form_factor,
                    m.pinch_distance);
      os << line;
    }
    os << "  pinch " << (r.pinch_pass(q) ? "PASS" : "FAIL") << " (max " << format_value(r.max_pinch(q))
       << ", tolerance " << format_value(kPinchTolerance) << ")\n";
  }
  if (c.mode == RunMode::coupled) {
    os << "entanglement events: " << r.events.size() << "\n";
    for (const EntanglementEvent& e : r.events) {
      os << "  " << (e.kind == EntanglementEvent::Kind::death ? "death" : "birth") << " at step " << e.step
         << ", t = " << format_value(e.t) << "\n";
    }
  }
}

std::vector<double> default_scan_deltas() {
  std::vector<double> d(10);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = 0.05 + 0.05 * static_cast<double>(k);
  return d;
}

std::vector<ScanRow> delta_scan(const RunConfig& base, std::span<const double> deltas,
                                const std::optional<fs::path>& out_dir, unsigned threads) {
  if (base.mode != RunMode::coupled) throw ConfigError("delta scan needs a coupled configuration");
  if (deltas.empty()) throw ConfigError("delta scan needs at least one delta");
  for (double d : deltas) {
    RunConfig c = base;
    c.interaction.delta = d;
    c.validate();
  }

  std::vector<ScanRow> rows(deltas.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t k = next++; k < deltas.size(); k = next++) {
      try {
        RunConfig c = base;
        c.interaction.delta = deltas[k];
        const RunResult r = execute(c);
        if (out_dir) write_artifacts(r, *out_dir / ("delta_" + std::to_string(k)));
        ScanRow& row = rows[k];
        row.delta = deltas[k];
        for (std::size_t q = 0; q < 2; ++q) {
          row.mean_form_factor[q] = r.mean_form_factor(q);
          row.max_pinch[q] = r.max_pinch(q);
          row.pinch_pass[q] = r.pinch_pass(q);
        }
        row.deaths = r.count(EntanglementEvent::Kind::death);
        row.births = r.count(EntanglementEvent::Kind::birth);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, deltas.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  if (out_dir) {
    std::error_code ec;
    fs::create_directories(*out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir->string());
    write_with(*out_dir / "scan_summary.csv", [&](std::ostream& os) { write_scan_csv(os, rows); });
  }
  return rows;
}

void write_scan_csv(std::ostream& os, std::span<const ScanRow> rows) {
  os << "delta,mean_F_1,mean_F_2,max_pinch_1,max_pinch_2,pinch_pass_1,pinch_pass_2,esd_count,esb_count\n";
  for (const ScanRow& r : rows) {
    os << format_value(r.delta) << ',' << format_value(r.mean_form_factor[0]) << ','
       << format_value(r.mean_form_factor[1]) << ',' << format_value(r.max_pinch[0]) << ','
       << format_value(r.max_pinch[1]) << ',' << (r.pinch_pass[0] ? 1 : 0) << ',' << (r.pinch_pass[1] ? 1 : 0)
       << ',' << r.deaths << ',' << r.births << '\n';
  }
}

}  // namespace qmem
