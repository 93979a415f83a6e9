#pragma once

// CSV emission. Floating values use 12 significant digits.
//
// trace.csv:   t,sx_I,sy_I,sx_S,sy_S,gamma,V,I[,sx2_I,sy2_I,sx2_S,sy2_S,gamma2,V2,I2,concurrence]
// metrics.csv: period,S,P,F,pinch_distance   (one file per memristor)

#include <ostream>
#include <span>
#include <string>

#include "qmem/analysis.hpp"
#include "qmem/measurement.hpp"

namespace qmem {

std::string format_value(double v);

void write_trace_csv(std::ostream& os, const ObservableTrace& trace);
void write_metrics_csv(std::ostream& os, std::span<const LoopMetrics> metrics);

}  // namespace qmem
