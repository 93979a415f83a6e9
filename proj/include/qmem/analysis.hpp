#pragma once

// Hysteresis-loop geometry and two-qubit entanglement.

#include <cstddef>
#include <span>
#include <vector>

#include "qmem/linalg.hpp"
#include "qmem/measurement.hpp"

namespace qmem {

/// One driving period of the I-V curve, normalized by the trace maxima.
/// The last point is implicitly joined to the first.
struct HysteresisLoop {
  std::size_t period = 0;
  std::vector<double> v;
  std::vector<double> i;
  bool closed = true;

  std::size_t size() const noexcept { return v.size(); }
};

struct LoopSplit {
  std::vector<HysteresisLoop> loops;
  std::size_t dropped_points = 0;  // trailing samples that do not fill a period
};

struct LoopMetrics {
  double area = 0.0;       // S
  double perimeter = 0.0;  // P
  double form_factor = 0.0;  // 4 pi S / P^2
  double pinch_distance = 0.0;
};

inline constexpr double kPinchTolerance = 1e-3;
inline constexpr double kConcurrenceThreshold = 1e-4;

/// Cuts the normalized (V, I) series into consecutive periods of
/// `steps_per_period` samples. Requires at least one full period.
LoopSplit split_loops(std::span<const double> voltage, std::span<const double> current,
                      std::size_t steps_per_period);
LoopSplit split_loops(const QubitSeries& series, const TimeGrid& grid);

/// Closest approach of the closed polyline to the origin.
double pinch_distance(const HysteresisLoop& loop);

/// Area is the sum of |signed area| of the lobes obtained by cutting the
/// loop wherever it crosses V = 0 (each lobe closed along the V = 0 axis);
/// without crossings it is the plain shoelace area. A loop that crosses the
/// axis more than twice with nested pockets is overcounted.
/// Throws DomainError for a degenerate loop (zero perimeter or < 3 points).
LoopMetrics loop_metrics(const HysteresisLoop& loop);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

struct EntanglementEvent {
  enum class Kind { death, birth };
  Kind kind;
  std::size_t step;
  double t;
};

/// Death: concurrence falls below `threshold` and stays there for at least
/// two samples. Birth: concurrence rises back to `threshold` after a death.
std::vector<EntanglementEvent> entanglement_events(std::span<const double> t, std::span<const double> c,
                                                   double threshold = kConcurrenceThreshold);

}  // namespace qmem
