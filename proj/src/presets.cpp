#include <numbers>

#include "qmem/config.hpp"
#include "qmem/error.hpp"

namespace qmem {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDefaultDelta = 0.1;

RunConfig single_memristor(std::string name, double a, double b, double gamma0) {
  RunConfig c;
  c.name = std::move(name);
  c.mode = RunMode::single;
  c.init1 = {a, b};
  c.init2 = {a, b};
  c.gamma0_1 = gamma0;
  c.gamma0_2 = gamma0;
  return c;
}

// Shared by every two-memristor preset: (|e> + |g>)/sqrt2 on both qubits,
// slow decay, long drive and a fine grid because delta acts once per step.
RunConfig coupled(std::string name, InteractionSpec spec) {
  RunConfig c;
  c.name = std::move(name);
  c.mode = RunMode::coupled;
  c.init1 = {kPi / 4.0, 0.0};
  c.init2 = {kPi / 4.0, 0.0};
  c.gamma0_1 = 0.02;
  c.gamma0_2 = 0.02;
  c.periods = 20;
  c.steps_per_period = 1000;
  c.interaction = spec;
  c.note = "delta paper-unspecified";
  return c;
}

RunConfig fig1(std::string name, double gamma0) {
  RunConfig c = single_memristor(std::move(name), kPi / 8.0, kPi / 5.0, gamma0);
  c.periods = 6;
  c.steps_per_period = 1000;
  c.plot_normalization = Normalization::initial;
  return c;
}

RunConfig fig4() {
  RunConfig c = single_memristor("fig4", kPi / 4.0, kPi / 5.0, 0.4);
  c.periods = 4;
  c.steps_per_period = 30;
  c.shots.mode = ShotMode::sampled;
  c.shots.shots = 5000;
  c.shots.seed = 2024;
  return c;
}

}  // namespace

std::vector<PresetInfo> list_presets() {
  return {
      {"fig1a", "single memristor, a=pi/8, b=pi/5, gamma0=0.2"},
      {"fig1b", "single memristor, a=pi/8, b=pi/5, gamma0=0.02"},
      {"fig4", "single memristor, a=pi/4, b=pi/5, gamma0=0.4, 30 steps/period, 5000 shots"},
      {"fig7", "coupled, native sigma_y (x) sigma_y, gamma0=0.02, 20 periods"},
      {"fig8", "coupled, native sigma_y (x) sigma_y (concurrence and form factor view)"},
      {"fig9", "coupled, controlled ry, control on memristor 1"},
      {"fig10", "coupled, controlled ry (concurrence and form factor view)"},
      {"appx_xx", "coupled, native sigma_x (x) sigma_x"},
      {"appx_zz", "coupled, native sigma_z (x) sigma_z"},
      {"appx_crx", "coupled, controlled rx, control on memristor 1"},
      {"appx_crz", "coupled, controlled rz, control on memristor 1"},
      {"appx_pswap", "coupled, partial swap exp(-i delta SWAP)"},
  };
}

RunConfig preset(std::string_view name) {
  if (name == "fig1a") return fig1("fig1a", 0.2);
  if (name == "fig1b") return fig1("fig1b", 0.02);
  if (name == "fig4") return fig4();
  if (name == "fig7" || name == "fig8") {
    return coupled(std::string(name), InteractionSpec::native(Axis::y, kDefaultDelta));
  }
  if (name == "fig9" || name == "fig10") {
    return coupled(std::string(name), InteractionSpec::controlled(Axis::y, kDefaultDelta, Subsystem::first));
  }
  if (name == "appx_xx") return coupled("appx_xx", InteractionSpec::native(Axis::x, kDefaultDelta));
  if (name == "appx_zz") return coupled("appx_zz", InteractionSpec::native(Axis::z, kDefaultDelta));
  if (name == "appx_crx") {
    return coupled("appx_crx", InteractionSpec::controlled(Axis::x, kDefaultDelta, Subsystem::first));
  }
  if (name == "appx_crz") {
    return coupled("appx_crz", InteractionSpec::controlled(Axis::z, kDefaultDelta, Subsystem::first));
  }
  if (name == "appx_pswap") return coupled("appx_pswap", InteractionSpec::partial_swap(kDefaultDelta));
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

}  // namespace qmem
