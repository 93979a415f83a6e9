#pragma once

// Time-stepped evolution of one or two memristive qubits.
//
// Trajectories live in the interaction picture. Each step applies the
// amplitude-damping map accumulated over [t_i, t_{i+1}]; coupled runs then
// apply the interaction gate. Two independent references are provided: the
// closed-form interaction-picture solution and an RK4 integration of the
// lab-frame master equation.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qmem/linalg.hpp"
#include "qmem/ops.hpp"

namespace qmem {

/// Gamma(t) = gamma0 * (1 - sin(cos(omega t))).
struct DecayProfile {
  double gamma0 = 0.4;
  double omega = 1.0;
  double quad_tol = 1e-10;
  /// Replaces Gamma(t) by a constant (>= 0). Used by the analytic limits.
  std::optional<double> constant_rate;

  void validate() const;
};

struct TimeGrid {
  std::size_t periods = 4;
  std::size_t steps_per_period = 30;
  double omega = 1.0;
  /// Stop after this many steps instead of periods * steps_per_period.
  std::optional<std::size_t> total_steps;

  static constexpr std::size_t kMinStepsPerPeriod = 8;

  void validate() const;
  double period() const;
  double dt() const;
  std::size_t step_count() const;
  double time(std::size_t i) const { return static_cast<double>(i) * dt(); }
};

/// cos(a)|e> + sin(a) e^{ib} |g>, a in [0, pi/2], b in [0, 2 pi).
struct InitialState {
  double a = 0.0;
  double b = 0.0;

  void validate() const;
  ComplexMatrix ket() const;
  DensityMatrix density() const;
};

struct TrajectoryState {
  std::size_t step = 0;
  double t = 0.0;
  DensityMatrix rho;
};

using Trajectory = std::vector<TrajectoryState>;

double decay_rate(double t, const DecayProfile& p);

/// -1/2 * integral of Gamma over [t_start, t_end], adaptive Simpson to p.quad_tol.
double kappa(double t_start, double t_end, const DecayProfile& p);

/// kappa over every step of the grid.
std::vector<double> step_kappas(const TimeGrid& grid, const DecayProfile& p);

/// theta_i = arccos(exp(kappa(t_i, t_{i+1}))) per step.
std::vector<double> theta_schedule(const TimeGrid& grid, const DecayProfile& p);

enum class StepMode { kraus, collision };

/// States at t_0 ... t_N (N = grid.step_count()).
Trajectory run_single(const InitialState& init, const DecayProfile& p, const TimeGrid& grid,
                      StepMode mode = StepMode::kraus);

/// Closed-form interaction-picture state after accumulated decay `kappa_total`.
DensityMatrix analytic_state(const InitialState& init, double kappa_total);
DensityMatrix analytic_oracle(const InitialState& init, const DecayProfile& p, double t);

/// RK4 integration of the lab-frame master equation with H = omega sigma_z / 2.
/// Throws NumericalError when the trace drifts by more than 1e-6.
DensityMatrix lindblad_oracle(const InitialState& init, const DecayProfile& p, double t_end, double dt_ode);

/// One integration pass recording the state at each of `times` (non-decreasing, >= 0).
/// Each interval is split into ceil(dt / dt_ode) equal steps.
std::vector<DensityMatrix> lindblad_trajectory(const InitialState& init, const DecayProfile& p,
                                               std::span<const double> times, double dt_ode);

/// exp(i H t) rho exp(-i H t) for H = omega sigma_z / 2 (lab -> interaction picture).
DensityMatrix to_interaction_picture(const DensityMatrix& rho_lab, double t, double omega);

/// Both qubits evolve under their own damping map each step, then `spec` is
/// applied. Requires p1.omega == p2.omega.
Trajectory run_coupled(const InitialState& init1, const InitialState& init2, const DecayProfile& p1,
                       const DecayProfile& p2, const TimeGrid& grid, const InteractionSpec& spec);

/// One coupled step: (eps1 (x) eps2)(rho) followed by the interaction.
DensityMatrix coupled_step(const DensityMatrix& rho, const KrausPair& k1, const KrausPair& k2,
                           const InteractionSpec& spec);

}  // namespace qmem
