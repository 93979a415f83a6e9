#include "qmem/report.hpp"

#include <cstdio>

#include "qmem/error.hpp"

namespace qmem {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_trace_csv(std::ostream& os, const ObservableTrace& trace) {
  if (trace.qubits.empty() || trace.qubits.size() > 2) throw DimensionError("trace csv: one or two memristors expected");
  const bool coupled = trace.qubits.size() == 2;
  if (coupled && trace.concurrence.size() != trace.size()) {
    throw DimensionError("trace csv: concurrence series missing");
  }
  os << "t,sx_I,sy_I,sx_S,sy_S,gamma,V,I";
  if (coupled) os << ",sx2_I,sy2_I,sx2_S,sy2_S,gamma2,V2,I2,concurrence";
  os << '\n';
  for (std::size_t k = 0; k < trace.size(); ++k) {
    os << format_value(trace.t[k]);
    for (const QubitSeries& s : trace.qubits) {
      for (const auto* col : {&s.sx_I, &s.sy_I, &s.sx_S, &s.sy_S, &s.gamma, &s.V, &s.I}) {
        os << ',' << format_value((*col)[k]);
      }
    }
    if (coupled) os << ',' << format_value(trace.concurrence[k]);
    os << '\n';
  }
}

void write_metrics_csv(std::ostream& os, std::span<const LoopMetrics> metrics) {
  os << "period,S,P,F,pinch_distance\n";
  for (std::size_t p = 0; p < metrics.size(); ++p) {
    const LoopMetrics& m = metrics[p];
    os << p << ',' << format_value(m.area) << ',' << format_value(m.perimeter) << ','
       << format_value(m.form_factor) << ',' << format_value(m.pinch_distance) << '\n';
  }
}

}  // namespace qmem
