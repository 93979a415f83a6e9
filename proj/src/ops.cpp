#include "qmem/ops.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qmem/error.hpp"

namespace qmem {

using namespace std::complex_literals;

const char* axis_name(Axis axis) noexcept {
  switch (axis) {
    case Axis::x:
      return "x";
    case Axis::y:
      return "y";
    case Axis::z:
      return "z";
  }
  return "?";
}

Axis parse_axis(std::string_view text) {
  if (text == "x") return Axis::x;
  if (text == "y") return Axis::y;
  if (text == "z") return Axis::z;
  throw DomainError("unknown axis '" + std::string(text) + "' (expected x, y or z)");
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix y() { return ComplexMatrix(2, 2, {0.0, -1i, 1i, 0.0}); }
ComplexMatrix z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }
ComplexMatrix of(Axis axis) {
  switch (axis) {
    case Axis::x:
      return x();
    case Axis::y:
      return y();
    case Axis::z:
      return z();
  }
  return identity();
}
ComplexMatrix raising() { return ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}); }
ComplexMatrix lowering() { return ComplexMatrix(2, 2, {0.0, 0.0, 1.0, 0.0}); }
}  // namespace pauli

ComplexMatrix rotation(Axis axis, double angle) {
  return std::cos(angle / 2) * pauli::identity() - 1i * std::sin(angle / 2) * pauli::of(axis);
}

KrausPair damping_kraus(double kappa) {
  if (!(kappa <= 0.0)) throw DomainError("damping_kraus: kappa must be <= 0");
  const double amp = std::exp(kappa);
  // 1 - e^{2 kappa} via expm1 keeps precision for tiny steps.
  const double leak = std::sqrt(-std::expm1(2.0 * kappa));
  KrausPair k;
  k.e0 = ComplexMatrix(2, 2, {amp, 0.0, 0.0, 1.0});
  k.e1 = ComplexMatrix(2, 2, {0.0, 0.0, leak, 0.0});
  return k;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausPair& k) {
  if (rho.dim() != 2) throw DimensionError("apply_channel expects a single-qubit state");
  return DensityMatrix::assume_valid(sandwich(k.e0, rho.matrix()) + sandwich(k.e1, rho.matrix()));
}

ComplexMatrix collision_unitary(double theta) {
  const ComplexMatrix excited = ComplexMatrix::diagonal({1.0, 0.0});
  const ComplexMatrix ground = ComplexMatrix::diagonal({0.0, 1.0});
  const ComplexMatrix ancilla_rot = rotation(Axis::y, 2.0 * theta);
  const ComplexMatrix controlled_rot = kron(excited, ancilla_rot) + kron(ground, pauli::identity());
  const ComplexMatrix flip = kron(pauli::identity(), ComplexMatrix::diagonal({1.0, 0.0})) +
                             kron(pauli::x(), ComplexMatrix::diagonal({0.0, 1.0}));
  return matmul(flip, controlled_rot);
}

DensityMatrix collision_step(const DensityMatrix& rho, double theta) {
  if (rho.dim() != 2) throw DimensionError("collision_step expects a single-qubit state");
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
    throw DomainError("collision_step: theta must lie in [0, pi/2]");
  }
  const ComplexMatrix ancilla = ComplexMatrix::diagonal({1.0, 0.0});
  const auto joint = DensityMatrix::assume_valid(sandwich(collision_unitary(theta), kron(rho.matrix(), ancilla)));
  return partial_trace(joint, Subsystem::first);
}

std::pair<double, double> frame_to_schroedinger(double sx_interaction, double sy_interaction, double t,
                                                double omega) {
  const double c = std::cos(omega * t);
  const double s = std::sin(omega * t);
  return {c * sx_interaction - s * sy_interaction, s * sx_interaction + c * sy_interaction};
}

const char* interaction_kind_name(InteractionKind kind) noexcept {
  switch (kind) {
    case InteractionKind::none:
      return "none";
    case InteractionKind::native:
      return "native";
    case InteractionKind::controlled_rotation:
      return "controlled_rotation";
    case InteractionKind::partial_swap:
      return "partial_swap";
  }
  return "?";
}

InteractionKind parse_interaction_kind(std::string_view text) {
  if (text == "none") return InteractionKind::none;
  if (text == "native") return InteractionKind::native;
  if (text == "controlled_rotation") return InteractionKind::controlled_rotation;
  if (text == "partial_swap") return InteractionKind::partial_swap;
  throw DomainError("unknown interaction kind '" + std::string(text) + "'");
}

const char* dagger_convention_name(DaggerConvention c) noexcept {
  return c == DaggerConvention::paper ? "paper" : "standard";
}

DaggerConvention parse_dagger_convention(std::string_view text) {
  if (text == "paper") return DaggerConvention::paper;
  if (text == "standard") return DaggerConvention::standard;
  throw DomainError("unknown dagger convention '" + std::string(text) + "' (expected paper or standard)");
}

InteractionSpec InteractionSpec::native(Axis axis, double delta) {
  InteractionSpec s;
  s.kind = InteractionKind::native;
  s.axis = axis;
  s.delta = delta;
  return s;
}

InteractionSpec InteractionSpec::controlled(Axis axis, double delta, Subsystem control) {
  InteractionSpec s;
  s.kind = InteractionKind::controlled_rotation;
  s.axis = axis;
  s.delta = delta;
  s.control = control;
  return s;
}

InteractionSpec InteractionSpec::partial_swap(double delta) {
  InteractionSpec s;
  s.kind = InteractionKind::partial_swap;
  s.delta = delta;
  return s;
}

void InteractionSpec::validate() const {
  if (!std::isfinite(delta)) throw DomainError("interaction delta must be finite");
}

std::string InteractionSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case InteractionKind::none:
      return "none";
    case InteractionKind::native:
      os << "exp(-i d s" << axis_name(axis) << "(x)s" << axis_name(axis) << ")";
      break;
    case InteractionKind::controlled_rotation:
      os << "CR" << axis_name(axis) << " control=" << static_cast<int>(control);
      break;
    case InteractionKind::partial_swap:
      os << "exp(-i d SWAP)";
      break;
  }
  os << " d=" << delta << " (" << dagger_convention_name(dagger) << ")";
  return os.str();
}

ComplexMatrix swap_gate() {
  ComplexMatrix s(4, 4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

ComplexMatrix interaction_unitary(const InteractionSpec& spec) {
  spec.validate();
  const double d = spec.delta;
  switch (spec.kind) {
    case InteractionKind::none:
      return ComplexMatrix::identity(4);
    case InteractionKind::native: {
      // (s_a (x) s_a)^2 = I, so the exponential has this closed form.
      const ComplexMatrix pp = kron(pauli::of(spec.axis), pauli::of(spec.axis));
      return std::cos(d) * ComplexMatrix::identity(4) - 1i * std::sin(d) * pp;
    }
    case InteractionKind::controlled_rotation: {
      const ComplexMatrix cr = kron(ComplexMatrix::diagonal({1.0, 0.0}), rotation(spec.axis, d)) +
                               kron(ComplexMatrix::diagonal({0.0, 1.0}), pauli::identity());
      if (spec.control == Subsystem::first) return cr;
      const ComplexMatrix s = swap_gate();
      return matmul(matmul(s, cr), s);
    }
    case InteractionKind::partial_swap:
      return std::cos(d) * ComplexMatrix::identity(4) - 1i * std::sin(d) * swap_gate();
  }
  return ComplexMatrix::identity(4);
}

DensityMatrix apply_interaction(const DensityMatrix& rho, const InteractionSpec& spec) {
  if (rho.dim() != 4) throw DimensionError("apply_interaction expects a two-qubit state");
  if (spec.kind == InteractionKind::none) return rho;
  const ComplexMatrix a = interaction_unitary(spec);
  if (spec.dagger == DaggerConvention::paper) {
    return DensityMatrix::assume_valid(sandwich(a.adjoint(), rho.matrix()));
  }
  return DensityMatrix::assume_valid(sandwich(a, rho.matrix()));
}

}  // namespace qmem
