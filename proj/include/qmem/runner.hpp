#pragma once

// End-to-end driver: dynamics -> measurement -> analysis -> artifacts.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qmem/analysis.hpp"
#include "qmem/config.hpp"

namespace qmem {

struct RunResult {
  RunConfig config;
  ObservableTrace trace;
  std::vector<LoopSplit> loops;                  // per memristor
  std::vector<std::vector<LoopMetrics>> metrics;  // per memristor, per period
  std::vector<EntanglementEvent> events;          // coupled runs only

  double max_pinch(std::size_t memristor) const;
  bool pinch_pass(std::size_t memristor) const { return max_pinch(memristor) <= kPinchTolerance; }
  double mean_form_factor(std::size_t memristor) const;
  std::size_t count(EntanglementEvent::Kind kind) const;
};

/// Validates the config, then runs it. Nothing is written.
RunResult execute(const RunConfig& cfg);

/// Writes config.txt, trace.csv, metrics[_2].csv and SVG plots into `dir`.
/// Returns the written paths. Throws IoError.
std::vector<std::filesystem::path> write_artifacts(const RunResult& result, const std::filesystem::path& dir);

void print_summary(const RunResult& result, std::ostream& os);

struct ScanRow {
  double delta = 0.0;
  double mean_form_factor[2] = {0.0, 0.0};
  double max_pinch[2] = {0.0, 0.0};
  bool pinch_pass[2] = {false, false};
  std::size_t deaths = 0;
  std::size_t births = 0;
};

/// Ten values evenly spaced over [0.05, 0.5].
std::vector<double> default_scan_deltas();

/// One coupled run per delta, spread over `threads` workers (0 = hardware
/// concurrency). With `out_dir`, each run writes into out_dir/delta_<k> and
/// a scan_summary.csv is written next to them. Rows keep the input order.
std::vector<ScanRow> delta_scan(const RunConfig& base, std::span<const double> deltas,
                                const std::optional<std::filesystem::path>& out_dir = std::nullopt,
                                unsigned threads = 0);

void write_scan_csv(std::ostream& os, std::span<const ScanRow> rows);

}  // namespace qmem
