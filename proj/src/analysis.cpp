#include "qmem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmem/error.hpp"
#include "qmem/kernels.hpp"
#include "qmem/ops.hpp"

namespace qmem {

LoopSplit split_loops(std::span<const double> voltage, std::span<const double> current,
                      std::size_t steps_per_period) {
  if (voltage.size() != current.size()) throw DimensionError("split_loops: V and I differ in length");
  if (steps_per_period < TimeGrid::kMinStepsPerPeriod) throw DomainError("split_loops: too few steps per period");
  if (voltage.size() < steps_per_period) throw DomainError("split_loops: trace shorter than one period");

  double vmax = 0.0;
  double imax = 0.0;
  for (std::size_t k = 0; k < voltage.size(); ++k) {
    vmax = std::max(vmax, std::abs(voltage[k]));
    imax = std::max(imax, std::abs(current[k]));
  }
  const double vscale = vmax > 0.0 ? 1.0 / vmax : 1.0;
  const double iscale = imax > 0.0 ? 1.0 / imax : 1.0;

  LoopSplit out;
  const std::size_t full = voltage.size() / steps_per_period;
  out.dropped_points = voltage.size() - full * steps_per_period;
  out.loops.reserve(full);
  for (std::size_t p = 0; p < full; ++p) {
    HysteresisLoop loop;
    loop.period = p;
    loop.v.resize(steps_per_period);
    loop.i.resize(steps_per_period);
    for (std::size_t k = 0; k < steps_per_period; ++k) {
      loop.v[k] = voltage[p * steps_per_period + k] * vscale;
      loop.i[k] = current[p * steps_per_period + k] * iscale;
    }
    out.loops.push_back(std::move(loop));
  }
  return out;
}

LoopSplit split_loops(const QubitSeries& series, const TimeGrid& grid) {
  return split_loops(series.V, series.I, grid.steps_per_period);
}

double pinch_distance(const HysteresisLoop& loop) {
  const std::size_t n = loop.size();
  if (n == 0) throw DomainError("pinch_distance: empty loop");
  double best = std::hypot(loop.v[0], loop.i[0]);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = (k + 1 == n) ? 0 : k + 1;
    const double px = loop.v[k];
    const double py = loop.i[k];
    const double dx = loop.v[j] - px;
    const double dy = loop.i[j] - py;
    const double len2 = dx * dx + dy * dy;
    double u = 0.0;
    if (len2 > 0.0) u = std::clamp(-(px * dx + py * dy) / len2, 0.0, 1.0);
    best = std::min(best, std::hypot(px + u * dx, py + u * dy));
  }
  return best;
}

namespace {

double lobe_area_sum(const HysteresisLoop& loop) {
  const std::size_t n = loop.size();
  struct Crossing {
    std::size_t edge;  // crosses between vertex edge and edge+1
    double i;          // current at V = 0
  };
  std::vector<Crossing> crossings;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = (k + 1 == n) ? 0 : k + 1;
    const bool left = loop.v[k] >= 0.0;
    const bool right = loop.v[j] >= 0.0;
    if (left == right) continue;
    const double u = loop.v[k] / (loop.v[k] - loop.v[j]);
    crossings.push_back({k, loop.i[k] + u * (loop.i[j] - loop.i[k])});
  }
  if (crossings.size() < 2) {
    return 0.5 * std::abs(kernels::polygon_sums(loop.v, loop.i).twice_signed_area);
  }

  double total = 0.0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const Crossing& from = crossings[c];
    const Crossing& to = crossings[(c + 1) % crossings.size()];
    xs.assign(1, 0.0);
    ys.assign(1, from.i);
    std::size_t k = (from.edge + 1) % n;
    while (true) {
      xs.push_back(loop.v[k]);
      ys.push_back(loop.i[k]);
      if (k == to.edge) break;
      k = (k + 1) % n;
    }
    xs.push_back(0.0);
    ys.push_back(to.i);
    total += 0.5 * std::abs(kernels::polygon_sums(xs, ys).twice_signed_area);
  }
  return total;
}

}  // namespace

LoopMetrics loop_metrics(const HysteresisLoop& loop) {
  if (loop.v.size() != loop.i.size()) throw DimensionError("loop_metrics: V and I differ in length");
  if (loop.size() < 3) throw DomainError("loop_metrics: degenerate loop (fewer than 3 points)");
  LoopMetrics m;
  m.perimeter = kernels::polygon_sums(loop.v, loop.i).perimeter;
  if (!(m.perimeter > 0.0)) throw DomainError("loop_metrics: degenerate loop (zero perimeter)");
  m.area = lobe_area_sum(loop);
  m.form_factor = 4.0 * std::numbers::pi * m.area / (m.perimeter * m.perimeter);
  m.pinch_distance = pinch_distance(loop);
  return m;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("concurrence expects a two-qubit state");
  // rho = W W^dagger with W = V sqrt(diag(lambda)). The square roots of the
  // eigenvalues of rho (sy(x)sy) rho* (sy(x)sy) are the singular values of the
  // complex-symmetric tau = W^T (sy(x)sy) W.
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  ComplexMatrix w(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    const double root = std::sqrt(std::max(eig.values[c], 0.0));
    for (std::size_t r = 0; r < 4; ++r) w(r, c) = eig.vectors(r, c) * root;
  }
  ComplexMatrix wt(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) wt(r, c) = w(c, r);
  const ComplexMatrix flip = kron(pauli::y(), pauli::y());
  const ComplexMatrix tau = matmul(matmul(wt, flip), w);
  ComplexMatrix gram = matmul(tau, tau.adjoint());
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = r; c < 4; ++c) {
      const cplx avg = 0.5 * (gram(r, c) + std::conj(gram(c, r)));
      gram(r, c) = avg;
      gram(c, r) = std::conj(avg);
    }
  std::vector<double> mu = hermitian_eigenvalues(gram);
  std::vector<double> lam(4);
  for (std::size_t k = 0; k < 4; ++k) lam[k] = std::sqrt(std::max(mu[k], 0.0));
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::clamp(lam[0] - lam[1] - lam[2] - lam[3], 0.0, 1.0);
}

std::vector<EntanglementEvent> entanglement_events(std::span<const double> t, std::span<const double> c,
                                                   double threshold) {
  if (t.size() != c.size()) throw DimensionError("entanglement_events: time and concurrence differ in length");
  std::vector<EntanglementEvent> events;
  if (c.empty()) return events;
  bool alive = c[0] >= threshold;
  bool died = false;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (alive && c[k] < threshold) {
      if (k + 1 < c.size() && c[k + 1] < threshold) {
        events.push_back({EntanglementEvent::Kind::death, k, t[k]});
        alive = false;
        died = true;
      }
    } else if (!alive && c[k] >= threshold) {
      if (died) events.push_back({EntanglementEvent::Kind::birth, k, t[k]});
      alive = true;
    }
  }
  return events;
}

}  // namespace qmem
