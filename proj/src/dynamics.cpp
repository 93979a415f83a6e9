#include "qmem/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qmem/error.hpp"

namespace qmem {

using namespace std::complex_literals;

void DecayProfile::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("decay profile: omega must be > 0");
  if (!(quad_tol > 0.0)) throw DomainError("decay profile: quad_tol must be > 0");
  if (constant_rate) {
    if (!(*constant_rate >= 0.0) || !std::isfinite(*constant_rate)) {
      throw DomainError("decay profile: constant rate must be >= 0");
    }
    return;
  }
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw DomainError("decay profile: gamma0 must be > 0");
}

void TimeGrid::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("time grid: omega must be > 0");
  if (steps_per_period < kMinStepsPerPeriod) {
    throw DomainError("time grid: steps_per_period must be >= " + std::to_string(kMinStepsPerPeriod));
  }
  if (periods == 0 && !total_steps) throw DomainError("time grid: periods must be >= 1");
}

double TimeGrid::period() const { return 2.0 * std::numbers::pi / omega; }

double TimeGrid::dt() const { return period() / static_cast<double>(steps_per_period); }

std::size_t TimeGrid::step_count() const { return total_steps.value_or(periods * steps_per_period); }

void InitialState::validate() const {
  if (!(a >= 0.0 && a <= std::numbers::pi / 2)) throw DomainError("initial state: a must lie in [0, pi/2]");
  if (!(b >= 0.0 && b < 2.0 * std::numbers::pi)) throw DomainError("initial state: b must lie in [0, 2 pi)");
}

ComplexMatrix InitialState::ket() const {
  return ComplexMatrix(2, 1, {std::cos(a), std::sin(a) * std::exp(1i * b)});
}

DensityMatrix InitialState::density() const {
  validate();
  return DensityMatrix::pure(ket());
}

double decay_rate(double t, const DecayProfile& p) {
  if (p.constant_rate) return *p.constant_rate;
  return p.gamma0 * (1.0 - std::sin(std::cos(p.omega * t)));
}

namespace {

template <typename F>
double simpson_recursive(const F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                         int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_recursive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recursive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recursive(f, a, b, fa, fm, fb, whole, tol, 50);
}

}  // namespace

double kappa(double t_start, double t_end, const DecayProfile& p) {
  if (t_end < t_start) throw DomainError("kappa: reversed interval");
  if (t_end == t_start) return 0.0;
  if (p.constant_rate) return -0.5 * *p.constant_rate * (t_end - t_start);
  const auto rate = [&p](double t) { return decay_rate(t, p); };
  // Panels of at most a quarter drive period; a single Simpson panel over whole
  // periods sees identical samples and terminates early.
  const double max_panel = 0.5 * std::numbers::pi / std::abs(p.omega);
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((t_end - t_start) / max_panel)));
  const double h = (t_end - t_start) / static_cast<double>(panels);
  // kappa = -integral/2, so the integral needs twice the accuracy.
  const double tol = 2.0 * p.quad_tol / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = t_start + h * static_cast<double>(i);
    const double b = i + 1 == panels ? t_end : a + h;
    total += adaptive_simpson(rate, a, b, tol);
  }
  return -0.5 * total;
}

std::vector<double> step_kappas(const TimeGrid& grid, const DecayProfile& p) {
  grid.validate();
  p.validate();
  const std::size_t n = grid.step_count();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = kappa(grid.time(i), grid.time(i + 1), p);
  return out;
}

std::vector<double> theta_schedule(const TimeGrid& grid, const DecayProfile& p) {
  std::vector<double> thetas = step_kappas(grid, p);
  for (auto& k : thetas) k = std::acos(std::exp(k));
  return thetas;
}

Trajectory run_single(const InitialState& init, const DecayProfile& p, const TimeGrid& grid, StepMode mode) {
  if (p.omega != grid.omega) throw DomainError("run_single: profile and grid must share omega");
  const std::vector<double> kappas = step_kappas(grid, p);
  Trajectory out;
  out.reserve(kappas.size() + 1);
  out.push_back({0, 0.0, init.density()});
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    const DensityMatrix& prev = out.back().rho;
    DensityMatrix next = mode == StepMode::kraus ? apply_channel(prev, damping_kraus(kappas[i]))
                                                 : collision_step(prev, std::acos(std::exp(kappas[i])));
    out.push_back({i + 1, grid.time(i + 1), std::move(next)});
  }
  return out;
}

DensityMatrix analytic_state(const InitialState& init, double kappa_total) {
  init.validate();
  if (kappa_total > 0.0) throw DomainError("analytic_state: kappa must be <= 0");
  const double ca = std::cos(init.a);
  const double sa = std::sin(init.a);
  const double env = std::exp(kappa_total);
  const double pe = ca * ca * env * env;
  // rho = |psi><psi| with psi = (cos a, sin a e^{ib}); the coherence decays
  // with e^kappa and the excited population with e^{2 kappa}.
  const cplx coh = ca * sa * std::exp(-1i * init.b) * env;
  return DensityMatrix::assume_valid(ComplexMatrix(2, 2, {pe, coh, std::conj(coh), 1.0 - pe}));
}

DensityMatrix analytic_oracle(const InitialState& init, const DecayProfile& p, double t) {
  p.validate();
  return analytic_state(init, kappa(0.0, t, p));
}

DensityMatrix to_interaction_picture(const DensityMatrix& rho_lab, double t, double omega) {
  if (rho_lab.dim() != 2) throw DimensionError("to_interaction_picture expects a single-qubit state");
  const ComplexMatrix u = ComplexMatrix::diagonal({std::exp(0.5i * omega * t), std::exp(-0.5i * omega * t)});
  return DensityMatrix::assume_valid(sandwich(u, rho_lab.matrix()));
}

DensityMatrix lindblad_oracle(const InitialState& init, const DecayProfile& p, double t_end, double dt_ode) {
  const double times[] = {t_end};
  return std::move(lindblad_trajectory(init, p, times, dt_ode).front());
}

std::vector<DensityMatrix> lindblad_trajectory(const InitialState& init, const DecayProfile& p,
                                               std::span<const double> times, double dt_ode) {
  p.validate();
  if (!(dt_ode > 0.0)) throw DomainError("lindblad_oracle: dt_ode must be > 0");

  const ComplexMatrix h = (0.5 * p.omega) * pauli::z();
  const ComplexMatrix lower = pauli::lowering();
  const ComplexMatrix raise = pauli::raising();
  const ComplexMatrix excited = matmul(raise, lower);

  const auto rhs = [&](double t, const ComplexMatrix& rho) {
    ComplexMatrix comm = matmul(h, rho) - matmul(rho, h);
    ComplexMatrix diss = matmul(matmul(lower, rho), raise) - 0.5 * (matmul(excited, rho) + matmul(rho, excited));
    return (-1i) * comm + decay_rate(t, p) * diss;
  };

  std::vector<DensityMatrix> out;
  out.reserve(times.size());
  ComplexMatrix rho = init.density().matrix();
  double t = 0.0;
  for (const double t_end : times) {
    if (t_end < t) throw DomainError("lindblad_oracle: times must be >= 0 and non-decreasing");
    const double span = t_end - t;
    if (span > 0.0) {
      const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(span / dt_ode - 1e-9)));
      const double step = span / static_cast<double>(n);
      const double t0 = t;
      for (std::size_t i = 0; i < n; ++i) {
        const ComplexMatrix k1 = rhs(t, rho);
        const ComplexMatrix k2 = rhs(t + 0.5 * step, rho + (0.5 * step) * k1);
        const ComplexMatrix k3 = rhs(t + 0.5 * step, rho + (0.5 * step) * k2);
        const ComplexMatrix k4 = rhs(t + step, rho + step * k3);
        rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = i + 1 == n ? t_end : t0 + static_cast<double>(i + 1) * step;
        const cplx tr = rho.trace();
        if (!std::isfinite(tr.real()) || std::abs(tr - 1.0) > 1e-6) {
          throw NumericalError("lindblad_oracle: trace drifted to " + std::to_string(tr.real()) + " at t=" +
                               std::to_string(t));
        }
      }
    }
    out.push_back(DensityMatrix::assume_valid(rho));
  }
  return out;
}

DensityMatrix coupled_step(const DensityMatrix& rho, const KrausPair& k1, const KrausPair& k2,
                           const InteractionSpec& spec) {
  if (rho.dim() != 4) throw DimensionError("coupled_step expects a two-qubit state");
  const ComplexMatrix* first[2] = {&k1.e0, &k1.e1};
  const ComplexMatrix* second[2] = {&k2.e0, &k2.e1};
  ComplexMatrix acc(4, 4);
  for (const auto* a : first)
    for (const auto* b : second) acc += sandwich(kron(*a, *b), rho.matrix());
  return apply_interaction(DensityMatrix::assume_valid(acc), spec);
}

Trajectory run_coupled(const InitialState& init1, const InitialState& init2, const DecayProfile& p1,
                       const DecayProfile& p2, const TimeGrid& grid, const InteractionSpec& spec) {
  if (p1.omega != p2.omega || p1.omega != grid.omega) {
    throw DomainError("run_coupled: both memristors and the grid must share omega");
  }
  spec.validate();
  const std::vector<double> kap1 = step_kappas(grid, p1);
  const std::vector<double> kap2 = step_kappas(grid, p2);

  Trajectory out;
  out.reserve(kap1.size() + 1);
  out.push_back({0, 0.0, kron(init1.density(), init2.density())});
  for (std::size_t i = 0; i < kap1.size(); ++i) {
    DensityMatrix next = coupled_step(out.back().rho, damping_kraus(kap1[i]), damping_kraus(kap2[i]), spec);
    out.push_back({i + 1, grid.time(i + 1), std::move(next)});
  }
  return out;
}

}  // namespace qmem
