#pragma once

// Run configuration: a flat `key = value` text format with `#` comments.
//
//   preset = fig4
//   mode = single
//   a1 = pi/4
//   b1 = pi/5
//   gamma0_1 = 0.4
//   steps_per_period = 30
//
// Angles accept plain numbers or multiples of pi ("pi/4", "3*pi/8").

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmem/dynamics.hpp"
#include "qmem/measurement.hpp"
#include "qmem/ops.hpp"

namespace qmem {

enum class RunMode { single, coupled };
enum class Normalization { initial, max };

struct RunConfig {
  std::string name = "custom";
  RunMode mode = RunMode::single;
  InitialState init1{};
  InitialState init2{};
  double gamma0_1 = 0.4;
  double gamma0_2 = 0.4;
  double omega = 1.0;
  std::size_t periods = 4;
  std::size_t steps_per_period = 30;
  std::optional<std::size_t> total_steps;
  InteractionSpec interaction{};
  ShotConfig shots{};
  double mass = 1.0;
  double hbar = 1.0;
  Normalization plot_normalization = Normalization::max;
  std::string output_dir = "out";
  std::size_t max_ancillas = 640;
  Axis measure_axis = Axis::x;
  std::string note;  // free text carried into the summary (e.g. "delta paper-unspecified")

  /// Checks every field against the owning module's invariants. Throws ConfigError.
  void validate() const;

  std::size_t memristors() const noexcept { return mode == RunMode::coupled ? 2 : 1; }
  DecayProfile profile(std::size_t qubit) const;
  TimeGrid grid() const;
  PhysicalUnits units() const;
};

const char* run_mode_name(RunMode mode) noexcept;

/// Parses "pi/4", "3*pi/8", "-pi", "0.5". Throws ConfigError.
double parse_angle(std::string_view text);

RunConfig parse_config(std::string_view text);
std::string serialize_config(const RunConfig& cfg);

RunConfig load_config(const std::filesystem::path& path);
void save_config(const RunConfig& cfg, const std::filesystem::path& path);

/// Applies one `key = value` assignment; shared by the parser and CLI overrides.
void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value);

struct PresetInfo {
  std::string name;
  std::string description;
};

std::vector<PresetInfo> list_presets();

/// Throws ConfigError for unknown names.
RunConfig preset(std::string_view name);

}  // namespace qmem
