#include "qmem/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qmem/error.hpp"

namespace qmem {

const char* shot_mode_name(ShotMode mode) noexcept { return mode == ShotMode::exact ? "exact" : "sampled"; }

void ShotConfig::validate() const {
  if (mode == ShotMode::sampled && shots < 1) throw DomainError("shot config: shots must be >= 1");
}

void PhysicalUnits::validate() const {
  if (!(m > 0.0) || !(hbar > 0.0) || !(omega > 0.0)) throw DomainError("physical units must be > 0");
}

double exact_expectation(const DensityMatrix& rho, Axis axis) {
  if (rho.dim() != 2) throw DimensionError("exact_expectation expects a single-qubit state");
  return matmul(pauli::of(axis), rho.matrix()).trace().real();
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t measurement_stream(std::size_t qubit, std::size_t step, Axis axis) noexcept {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(qubit));
  h = splitmix64(h ^ static_cast<std::uint64_t>(step));
  return splitmix64(h ^ static_cast<std::uint64_t>(axis));
}

double sample_expectation(double exact, const ShotConfig& cfg, std::uint64_t stream) {
  cfg.validate();
  const double p = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(stream)));
  std::binomial_distribution<long long> draw(static_cast<long long>(cfg.shots), p);
  const auto k = draw(rng);
  return 2.0 * static_cast<double>(k) / static_cast<double>(cfg.shots) - 1.0;
}

double sampled_expectation(const DensityMatrix& rho, Axis axis, const ShotConfig& cfg, std::uint64_t stream) {
  return sample_expectation(exact_expectation(rho, axis), cfg, stream);
}

double shot_sigma(double exact, std::size_t shots) {
  return std::sqrt(std::max(0.0, 1.0 - exact * exact) / static_cast<double>(shots));
}

double voltage(double sy_lab, const PhysicalUnits& u) { return -0.5 * std::sqrt(u.m * u.hbar * u.omega / 2.0) * sy_lab; }

std::vector<double> time_derivative(std::span<const double> y, double dt) {
  const std::size_t n = y.size();
  if (n < 3) throw DomainError("time derivative needs at least 3 points");
  std::vector<double> d(n);
  d[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * dt);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i - 1]) / (2.0 * dt);
  d[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * dt);
  return d;
}

std::vector<double> current(std::span<const double> sx_lab, std::span<const double> sy_lab, double dt,
                            const PhysicalUnits& u) {
  if (sx_lab.size() != sy_lab.size()) throw DimensionError("current: sx and sy series differ in length");
  const std::vector<double> dsy = time_derivative(sy_lab, dt);
  const double drive = std::sqrt(u.m * u.hbar * u.omega / 2.0);
  const double bias = std::sqrt(u.m * u.omega / (2.0 * u.hbar));
  std::vector<double> out(sx_lab.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = drive * dsy[i] - bias * sx_lab[i];
  return out;
}

ObservableTrace observe(const std::vector<std::vector<DensityMatrix>>& states, std::span<const DecayProfile> profiles,
                        const TimeGrid& grid, const ShotConfig& shots, const PhysicalUnits& units) {
  shots.validate();
  units.validate();
  if (states.size() != profiles.size()) throw DimensionError("observe: one decay profile per qubit required");
  ObservableTrace trace;
  trace.dt = grid.dt();
  trace.mode = shots.mode;
  trace.shots = shots.mode == ShotMode::sampled ? shots.shots : 0;
  const std::size_t n = states.empty() ? 0 : states.front().size();
  trace.t.resize(n);
  for (std::size_t i = 0; i < n; ++i) trace.t[i] = grid.time(i);

  for (std::size_t q = 0; q < states.size(); ++q) {
    if (states[q].size() != n) throw DimensionError("observe: qubit series differ in length");
    QubitSeries s;
    for (auto* v : {&s.sx_I, &s.sy_I, &s.sx_S, &s.sy_S, &s.gamma, &s.V}) v->resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = trace.t[i];
      const double sx = exact_expectation(states[q][i], Axis::x);
      const double sy = exact_expectation(states[q][i], Axis::y);
      auto [sx_lab, sy_lab] = frame_to_schroedinger(sx, sy, t, grid.omega);
      if (shots.mode == ShotMode::sampled) {
        // Lab-frame components are what a rotated-basis readout measures.
        sx_lab = sample_expectation(sx_lab, shots, measurement_stream(q, i, Axis::x));
        sy_lab = sample_expectation(sy_lab, shots, measurement_stream(q, i, Axis::y));
        const auto [sx_back, sy_back] = frame_to_schroedinger(sx_lab, sy_lab, -t, grid.omega);
        s.sx_I[i] = sx_back;
        s.sy_I[i] = sy_back;
      } else {
        s.sx_I[i] = sx;
        s.sy_I[i] = sy;
      }
      s.sx_S[i] = sx_lab;
      s.sy_S[i] = sy_lab;
      s.gamma[i] = decay_rate(t, profiles[q]);
      s.V[i] = voltage(sy_lab, units);
    }
    s.I = current(s.sx_S, s.sy_S, trace.dt, units);
    trace.qubits.push_back(std::move(s));
  }
  return trace;
}

ObservableTrace observe_single(const Trajectory& traj, const DecayProfile& p, const TimeGrid& grid,
                               const ShotConfig& shots, const PhysicalUnits& units) {
  std::vector<std::vector<DensityMatrix>> states(1);
  states[0].reserve(traj.size());
  for (const auto& s : traj) {
    if (s.rho.dim() != 2) throw DimensionError("observe_single expects single-qubit states");
    states[0].push_back(s.rho);
  }
  const DecayProfile profiles[1] = {p};
  return observe(states, profiles, grid, shots, units);
}

ObservableTrace observe_coupled(const Trajectory& traj, const DecayProfile& p1, const DecayProfile& p2,
                                const TimeGrid& grid, const ShotConfig& shots, const PhysicalUnits& units) {
  std::vector<std::vector<DensityMatrix>> states(2);
  for (auto& v : states) v.reserve(traj.size());
  for (const auto& s : traj) {
    states[0].push_back(partial_trace(s.rho, Subsystem::first));
    states[1].push_back(partial_trace(s.rho, Subsystem::second));
  }
  const DecayProfile profiles[2] = {p1, p2};
  return observe(states, profiles, grid, shots, units);
}

}  // namespace qmem
