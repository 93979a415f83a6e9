#pragma once

// Gate and channel catalog for the memristor circuits.
//
// Basis convention: |e> is index 0 and |g> is index 1 inside a qubit, so
// sigma_z = diag(1, -1) and sigma_minus = |g><e| has its entry at (1, 0).

#include <string>
#include <string_view>
#include <utility>

#include "qmem/linalg.hpp"

namespace qmem {

enum class Axis { x, y, z };

const char* axis_name(Axis axis) noexcept;
Axis parse_axis(std::string_view text);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
ComplexMatrix of(Axis axis);
ComplexMatrix raising();  // |e><g|
ComplexMatrix lowering();  // |g><e|
}  // namespace pauli

/// exp(-i * angle * sigma_axis / 2).
ComplexMatrix rotation(Axis axis, double angle);

struct KrausPair {
  ComplexMatrix e0{2, 2};
  ComplexMatrix e1{2, 2};
};

/// Amplitude damping over an interval with accumulated kappa <= 0:
/// E0 = diag(e^kappa, 1), E1 = sqrt(1 - e^{2 kappa}) |g><e|.
KrausPair damping_kraus(double kappa);

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausPair& k);

/// One collision with a fresh ancilla in |0>: a rotation of the ancilla
/// controlled on the system being excited, then a NOT on the system
/// controlled by the ancilla, then the ancilla is traced out. The ancilla
/// rotation is ry(2*theta), so the map equals the damping channel with
/// kappa = ln(cos theta). theta must lie in [0, pi/2].
DensityMatrix collision_step(const DensityMatrix& rho, double theta);

/// The 4x4 unitary of the collision circuit on (system, ancilla).
ComplexMatrix collision_unitary(double theta);

/// Rotates interaction-picture transverse Bloch components into the lab frame
/// after free evolution exp(-i omega t sigma_z / 2).
std::pair<double, double> frame_to_schroedinger(double sx_interaction, double sy_interaction, double t,
                                                double omega);

enum class InteractionKind { none, native, controlled_rotation, partial_swap };
enum class DaggerConvention { paper, standard };

const char* interaction_kind_name(InteractionKind kind) noexcept;
InteractionKind parse_interaction_kind(std::string_view text);
const char* dagger_convention_name(DaggerConvention c) noexcept;
DaggerConvention parse_dagger_convention(std::string_view text);

struct InteractionSpec {
  InteractionKind kind = InteractionKind::none;
  Axis axis = Axis::y;
  double delta = 0.0;  // radians
  Subsystem control = Subsystem::first;
  // `paper` evolves rho -> A^dagger rho A, `standard` evolves rho -> A rho A^dagger.
  DaggerConvention dagger = DaggerConvention::paper;

  static InteractionSpec none() { return {}; }
  static InteractionSpec native(Axis axis, double delta);
  static InteractionSpec controlled(Axis axis, double delta, Subsystem control);
  static InteractionSpec partial_swap(double delta);

  /// Throws DomainError for a non-finite delta.
  void validate() const;
  std::string describe() const;
};

ComplexMatrix swap_gate();

/// none: I; native: exp(-i delta sigma_a (x) sigma_a); controlled rotation:
/// |e><e| (x) R_a(delta) + |g><g| (x) I with control on qubit 1 (conjugated
/// by SWAP for control 2); partial swap: exp(-i delta SWAP).
ComplexMatrix interaction_unitary(const InteractionSpec& spec);

DensityMatrix apply_interaction(const DensityMatrix& rho, const InteractionSpec& spec);

}  // namespace qmem
