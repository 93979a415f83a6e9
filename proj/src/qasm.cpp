#include "qmem/qasm.hpp"

#include <cstdio>
#include <numbers>
#include <cstdlib>
#include <sstream>

#include "qmem/error.hpp"

namespace qmem {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* kGateDefs =
    "gate qm_cry(theta) c,t { ry(theta/2) t; cx c,t; ry(-theta/2) t; cx c,t; }\n"
    "gate qm_crz(theta) c,t { u1(theta/2) t; cx c,t; u1(-theta/2) t; cx c,t; }\n"
    "gate qm_crx(theta) c,t { h t; qm_crz(theta) c,t; h t; }\n"
    "gate qm_rzz(theta) a,b { cx a,b; u1(theta) b; cx a,b; }\n"
    "gate qm_rxx(theta) a,b { h a; h b; qm_rzz(theta) a,b; h a; h b; }\n"
    "gate qm_ryy(theta) a,b { rx(pi/2) a; rx(pi/2) b; qm_rzz(theta) a,b; rx(-pi/2) a; rx(-pi/2) b; }\n";

// Internal sigma_x, sigma_y, sigma_z map to X, -Y, -Z.
double axis_sign(Axis axis) { return axis == Axis::x ? 1.0 : -1.0; }

void emit_interaction(std::ostream& os, const InteractionSpec& spec) {
  // The A^dagger-first convention negates every angle below.
  const double s = spec.dagger == DaggerConvention::paper ? -1.0 : 1.0;
  const double d = spec.delta;
  switch (spec.kind) {
    case InteractionKind::none:
      return;
    case InteractionKind::native: {
      // exp(-i d sa(x)sa); the sign flips of sa cancel in the product.
      const char* gate = spec.axis == Axis::x ? "qm_rxx" : spec.axis == Axis::y ? "qm_ryy" : "qm_rzz";
      os << gate << '(' << g17(s * 2.0 * d) << ") m[0],m[1];\n";
      return;
    }
    case InteractionKind::controlled_rotation: {
      const char* gate = spec.axis == Axis::x ? "qm_crx" : spec.axis == Axis::y ? "qm_cry" : "qm_crz";
      const char* wires = spec.control == Subsystem::first ? "m[0],m[1]" : "m[1],m[0]";
      os << gate << '(' << g17(s * axis_sign(spec.axis) * d) << ") " << wires << ";\n";
      return;
    }
    case InteractionKind::partial_swap: {
      // exp(-i d SWAP) = e^{-i d/2} exp(-i d/2 (XX + YY + ZZ)); global phase dropped.
      const std::string a = g17(s * d);
      os << "qm_rxx(" << a << ") m[0],m[1];\n";
      os << "qm_ryy(" << a << ") m[0],m[1];\n";
      os << "qm_rzz(" << a << ") m[0],m[1];\n";
      return;
    }
  }
}

}  // namespace

std::string export_qasm(const RunConfig& cfg) {
  cfg.validate();
  const TimeGrid grid = cfg.grid();
  const std::size_t steps = grid.step_count();
  const std::size_t mems = cfg.memristors();
  if (steps * mems > cfg.max_ancillas) {
    throw ConfigError("circuit needs " + std::to_string(steps * mems) + " ancillas, cap is " +
                      std::to_string(cfg.max_ancillas));
  }
  std::vector<std::vector<double>> thetas;
  for (std::size_t q = 0; q < mems; ++q) thetas.push_back(theta_schedule(grid, cfg.profile(q)));

  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "// " << cfg.name << ": " << mems << " memristor(s), " << steps << " steps, dt = " << g17(grid.dt()) << "\n";
  os << kGateDefs;
  os << "qreg m[" << mems << "];\n";
  os << "qreg a[" << steps * mems << "];\n";
  os << "creg c[" << mems << "];\n";

  const InitialState inits[2] = {cfg.init1, cfg.init2};
  for (std::size_t q = 0; q < mems; ++q) {
    os << "u3(" << g17(std::numbers::pi - 2.0 * inits[q].a) << ',' << g17(-inits[q].b) << ",0) m[" << q << "];\n";
  }
  for (std::size_t i = 0; i < steps; ++i) {
    for (std::size_t q = 0; q < mems; ++q) {
      const std::size_t anc = q * steps + i;
      os << "qm_cry(2*" << g17(thetas[q][i]) << ") m[" << q << "],a[" << anc << "];\n";
      os << "cx a[" << anc << "],m[" << q << "];\n";
    }
    if (mems == 2) emit_interaction(os, cfg.interaction);
  }

  // Back to the lab frame, then rotate the requested Pauli onto Z.
  const double t_end = grid.time(steps);
  for (std::size_t q = 0; q < mems; ++q) {
    os << "rz(" << g17(-cfg.omega * t_end) << ") m[" << q << "];\n";
    if (cfg.measure_axis == Axis::y) {
      // Outcome 0 corresponds to internal sigma_y = -1.
      os << "sdg m[" << q << "];\n";
    }
    os << "h m[" << q << "];\n";
    os << "measure m[" << q << "] -> c[" << q << "];\n";
  }
  return os.str();
}

std::vector<double> qasm_thetas(const std::string& qasm) {
  std::vector<double> out;
  const std::string key = "qm_cry(2*";
  std::size_t pos = 0;
  while ((pos = qasm.find(key, pos)) != std::string::npos) {
    pos += key.size();
    const std::size_t close = qasm.find(')', pos);
    if (close == std::string::npos) break;
    out.push_back(std::strtod(qasm.substr(pos, close - pos).c_str(), nullptr));
    pos = close;
  }
  return out;
}

}  // namespace qmem
