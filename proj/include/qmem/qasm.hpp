#pragma once

// OpenQASM 2.0 export of the ancilla-explicit collision circuit.
//
// The internal basis puts |e> at index 0; OpenQASM uses |0> = |g>, so the
// exported circuit is the internal one conjugated by X on every qubit.
// Registers: m[k] holds memristor k, a[k * steps + i] is the fresh ancilla
// of memristor k at step i, c[k] is its readout bit.

#include <string>
#include <vector>

#include "qmem/config.hpp"

namespace qmem {

/// Throws ConfigError if the config is invalid or needs more ancillas than
/// cfg.max_ancillas.
std::string export_qasm(const RunConfig& cfg);

/// Collision angles read back from `qm_cry(2*theta)` lines, in emission order.
std::vector<double> qasm_thetas(const std::string& qasm);

}  // namespace qmem
