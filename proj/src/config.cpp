#include "qmem/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qmem/error.hpp"

namespace qmem {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view key) {
  const std::string s(trim(text));
  if (s.empty()) throw ConfigError("missing value for '" + std::string(key) + "'");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw ConfigError("invalid number '" + s + "' for '" + std::string(key) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view text, std::string_view key) {
  const std::string_view s = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("invalid count '" + std::string(s) + "' for '" + std::string(key) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view text, std::string_view key) {
  const std::string_view s = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("invalid integer '" + std::string(s) + "' for '" + std::string(key) + "'");
  }
  return v;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename F>
auto rethrow_as_config(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

const char* run_mode_name(RunMode mode) noexcept { return mode == RunMode::coupled ? "coupled" : "single"; }

double parse_angle(std::string_view text) {
  std::string_view s = trim(text);
  const auto pos = s.find("pi");
  if (pos == std::string_view::npos) return parse_number(s, "angle");

  double factor = 1.0;
  std::string_view head = trim(s.substr(0, pos));
  if (!head.empty()) {
    if (head == "-") {
      factor = -1.0;
    } else {
      if (head.back() != '*') throw ConfigError("invalid angle '" + std::string(s) + "'");
      factor = parse_number(head.substr(0, head.size() - 1), "angle");
    }
  }
  std::string_view tail = trim(s.substr(pos + 2));
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw ConfigError("invalid angle '" + std::string(s) + "'");
    divisor = parse_number(tail.substr(1), "angle");
    if (divisor == 0.0) throw ConfigError("angle divides by zero: '" + std::string(s) + "'");
  }
  return factor * std::numbers::pi / divisor;
}

void set_config_value(RunConfig& cfg, std::string_view key_in, std::string_view value_in) {
  const std::string key(trim(key_in));
  const std::string_view value = trim(value_in);
  rethrow_as_config([&] {
    if (key == "preset" || key == "name") {
      cfg.name = std::string(value);
    } else if (key == "mode") {
      if (value == "single") {
        cfg.mode = RunMode::single;
      } else if (value == "coupled") {
        cfg.mode = RunMode::coupled;
      } else {
        throw ConfigError("mode must be single or coupled");
      }
    } else if (key == "a1") {
      cfg.init1.a = parse_angle(value);
    } else if (key == "b1") {
      cfg.init1.b = parse_angle(value);
    } else if (key == "a2") {
      cfg.init2.a = parse_angle(value);
    } else if (key == "b2") {
      cfg.init2.b = parse_angle(value);
    } else if (key == "gamma0_1" || key == "gamma0") {
      cfg.gamma0_1 = parse_number(value, key);
      if (key == "gamma0") cfg.gamma0_2 = cfg.gamma0_1;
    } else if (key == "gamma0_2") {
      cfg.gamma0_2 = parse_number(value, key);
    } else if (key == "omega") {
      cfg.omega = parse_number(value, key);
    } else if (key == "periods") {
      cfg.periods = parse_count(value, key);
    } else if (key == "steps_per_period") {
      cfg.steps_per_period = parse_count(value, key);
    } else if (key == "steps") {
      if (value == "auto") {
        cfg.total_steps.reset();
      } else {
        cfg.total_steps = parse_count(value, key);
      }
    } else if (key == "interaction") {
      cfg.interaction.kind = parse_interaction_kind(value);
    } else if (key == "axis") {
      cfg.interaction.axis = parse_axis(value);
    } else if (key == "delta") {
      cfg.interaction.delta = parse_angle(value);
    } else if (key == "control") {
      cfg.interaction.control = subsystem_from_index(static_cast<int>(parse_count(value, key)));
    } else if (key == "dagger_convention") {
      cfg.interaction.dagger = parse_dagger_convention(value);
    } else if (key == "shots_mode") {
      if (value == "exact") {
        cfg.shots.mode = ShotMode::exact;
      } else if (value == "sampled") {
        cfg.shots.mode = ShotMode::sampled;
      } else {
        throw ConfigError("shots_mode must be exact or sampled");
      }
    } else if (key == "shots") {
      cfg.shots.shots = parse_count(value, key);
    } else if (key == "seed") {
      cfg.shots.seed = parse_u64(value, key);
    } else if (key == "m") {
      cfg.mass = parse_number(value, key);
    } else if (key == "hbar") {
      cfg.hbar = parse_number(value, key);
    } else if (key == "normalization") {
      if (value == "initial") {
        cfg.plot_normalization = Normalization::initial;
      } else if (value == "max") {
        cfg.plot_normalization = Normalization::max;
      } else {
        throw ConfigError("normalization must be initial or max");
      }
    } else if (key == "out") {
      cfg.output_dir = std::string(value);
    } else if (key == "max_ancillas") {
      cfg.max_ancillas = parse_count(value, key);
    } else if (key == "measure_axis") {
      cfg.measure_axis = parse_axis(value);
      if (cfg.measure_axis == Axis::z) throw ConfigError("measure_axis must be x or y");
    } else if (key == "note") {
      cfg.note = std::string(value);
    } else {
      throw ConfigError("unknown configuration key '" + key + "'");
    }
  });
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      set_config_value(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# memristor run configuration\n";
  os << "preset = " << cfg.name << "\n";
  os << "mode = " << run_mode_name(cfg.mode) << "\n";
  os << "a1 = " << format_double(cfg.init1.a) << "\n";
  os << "b1 = " << format_double(cfg.init1.b) << "\n";
  os << "a2 = " << format_double(cfg.init2.a) << "\n";
  os << "b2 = " << format_double(cfg.init2.b) << "\n";
  os << "gamma0_1 = " << format_double(cfg.gamma0_1) << "\n";
  os << "gamma0_2 = " << format_double(cfg.gamma0_2) << "\n";
  os << "omega = " << format_double(cfg.omega) << "\n";
  os << "periods = " << cfg.periods << "\n";
  os << "steps_per_period = " << cfg.steps_per_period << "\n";
  os << "steps = " << (cfg.total_steps ? std::to_string(*cfg.total_steps) : std::string("auto")) << "\n";
  os << "interaction = " << interaction_kind_name(cfg.interaction.kind) << "\n";
  os << "axis = " << axis_name(cfg.interaction.axis) << "\n";
  os << "delta = " << format_double(cfg.interaction.delta) << "\n";
  os << "control = " << static_cast<int>(cfg.interaction.control) << "\n";
  os << "dagger_convention = " << dagger_convention_name(cfg.interaction.dagger) << "\n";
  os << "shots_mode = " << shot_mode_name(cfg.shots.mode) << "\n";
  os << "shots = " << cfg.shots.shots << "\n";
  os << "seed = " << cfg.shots.seed << "\n";
  os << "m = " << format_double(cfg.mass) << "\n";
  os << "hbar = " << format_double(cfg.hbar) << "\n";
  os << "normalization = " << (cfg.plot_normalization == Normalization::initial ? "initial" : "max") << "\n";
  os << "out = " << cfg.output_dir << "\n";
  os << "max_ancillas = " << cfg.max_ancillas << "\n";
  os << "measure_axis = " << axis_name(cfg.measure_axis) << "\n";
  if (!cfg.note.empty()) os << "note = " << cfg.note << "\n";
  return os.str();
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void save_config(const RunConfig& cfg, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write config file " + path.string());
  out << serialize_config(cfg);
  if (!out) throw IoError("failed writing " + path.string());
}

DecayProfile RunConfig::profile(std::size_t qubit) const {
  DecayProfile p;
  p.gamma0 = qubit == 0 ? gamma0_1 : gamma0_2;
  p.omega = omega;
  return p;
}

TimeGrid RunConfig::grid() const {
  TimeGrid g;
  g.periods = periods;
  g.steps_per_period = steps_per_period;
  g.omega = omega;
  g.total_steps = total_steps;
  return g;
}

PhysicalUnits RunConfig::units() const { return {mass, hbar, omega}; }

void RunConfig::validate() const {
  rethrow_as_config([&] {
    init1.validate();
    profile(0).validate();
    grid().validate();
    shots.validate();
    units().validate();
    if (mode == RunMode::coupled) {
      init2.validate();
      profile(1).validate();
      interaction.validate();
    }
    return 0;
  });
}

}  // namespace qmem
