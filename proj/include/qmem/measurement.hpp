#pragma once

// Observables of a trajectory: Bloch components in both pictures, the
// memristive voltage and current, and finite-shot emulation.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qmem/dynamics.hpp"
#include "qmem/linalg.hpp"
#include "qmem/ops.hpp"

namespace qmem {

enum class ShotMode { exact, sampled };

const char* shot_mode_name(ShotMode mode) noexcept;

struct ShotConfig {
  std::size_t shots = 5000;
  std::uint64_t seed = 0;
  ShotMode mode = ShotMode::exact;

  void validate() const;
};

struct PhysicalUnits {
  double m = 1.0;
  double hbar = 1.0;
  double omega = 1.0;

  void validate() const;
};

/// Tr(sigma_axis rho) for a single-qubit state.
double exact_expectation(const DensityMatrix& rho, Axis axis);

/// Sub-stream of the master seed for one (qubit, step, axis) measurement.
std::uint64_t measurement_stream(std::size_t qubit, std::size_t step, Axis axis) noexcept;

/// Draws k ~ Binomial(shots, (1 + exact) / 2) from the generator keyed by
/// (cfg.seed, stream) and returns 2k/shots - 1.
double sample_expectation(double exact, const ShotConfig& cfg, std::uint64_t stream);
double sampled_expectation(const DensityMatrix& rho, Axis axis, const ShotConfig& cfg, std::uint64_t stream = 0);

/// Standard deviation of the shot estimator around `exact`.
double shot_sigma(double exact, std::size_t shots);

/// -1/2 sqrt(m hbar omega / 2) <sigma_y>.
double voltage(double sy_lab, const PhysicalUnits& u);

/// Second-order finite differences: central inside, one-sided at both ends.
std::vector<double> time_derivative(std::span<const double> y, double dt);

/// sqrt(m hbar omega / 2) d<sigma_y>/dt - sqrt(m omega / (2 hbar)) <sigma_x>.
std::vector<double> current(std::span<const double> sx_lab, std::span<const double> sy_lab, double dt,
                            const PhysicalUnits& u);

struct QubitSeries {
  std::vector<double> sx_I;
  std::vector<double> sy_I;
  std::vector<double> sx_S;
  std::vector<double> sy_S;
  std::vector<double> gamma;
  std::vector<double> V;
  std::vector<double> I;
};

struct ObservableTrace {
  std::vector<double> t;
  double dt = 0.0;
  ShotMode mode = ShotMode::exact;
  std::size_t shots = 0;
  std::vector<QubitSeries> qubits;
  std::vector<double> concurrence;  // coupled runs only

  std::size_t size() const noexcept { return t.size(); }
};

/// Observables of the reduced single-qubit states `states[q][i]` of each
/// memristor q at grid time index i.
ObservableTrace observe(const std::vector<std::vector<DensityMatrix>>& states, std::span<const DecayProfile> profiles,
                        const TimeGrid& grid, const ShotConfig& shots, const PhysicalUnits& units);

ObservableTrace observe_single(const Trajectory& traj, const DecayProfile& p, const TimeGrid& grid,
                               const ShotConfig& shots, const PhysicalUnits& units);

/// Per-qubit observables from the partial traces of a coupled trajectory.
ObservableTrace observe_coupled(const Trajectory& traj, const DecayProfile& p1, const DecayProfile& p2,
                                const TimeGrid& grid, const ShotConfig& shots, const PhysicalUnits& units);

}  // namespace qmem
