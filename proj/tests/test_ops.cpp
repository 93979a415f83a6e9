#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qmem/analysis.hpp"
#include "qmem/error.hpp"
#include "qmem/ops.hpp"
#include "support.hpp"

using namespace qmem;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I1{0.0, 1.0};

DensityMatrix excited() { return DensityMatrix(ComplexMatrix::diagonal({1.0, 0.0})); }
DensityMatrix ground() { return DensityMatrix(ComplexMatrix::diagonal({0.0, 1.0})); }

std::vector<InteractionSpec> all_families(double delta) {
  std::vector<InteractionSpec> out;
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    out.push_back(InteractionSpec::native(a, delta));
    out.push_back(InteractionSpec::controlled(a, delta, Subsystem::first));
    out.push_back(InteractionSpec::controlled(a, delta, Subsystem::second));
  }
  out.push_back(InteractionSpec::partial_swap(delta));
  return out;
}

}  // namespace

TEST(Pauli, BasisConvention) {
  EXPECT_EQ(pauli::z()(0, 0), cplx(1.0));
  EXPECT_EQ(pauli::lowering()(1, 0), cplx(1.0));
  EXPECT_EQ(max_abs(pauli::lowering() - matmul(pauli::lowering(), ComplexMatrix::diagonal({1.0, 0.0}))), 0.0);
  EXPECT_LT(max_abs_diff(rotation(Axis::y, kPi), -I1 * pauli::y()), 1e-15);
  EXPECT_EQ(parse_axis("y"), Axis::y);
  EXPECT_THROW(parse_axis("w"), DomainError);
}

TEST(DampingKraus, Examples) {
  const KrausPair k0 = damping_kraus(0.0);
  EXPECT_EQ(max_abs_diff(k0.e0, ComplexMatrix::identity(2)), 0.0);
  EXPECT_EQ(max_abs(k0.e1), 0.0);

  const KrausPair kh = damping_kraus(std::log(1.0 / std::sqrt(2.0)));
  EXPECT_NEAR(kh.e0(0, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(kh.e0(1, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(kh.e1(1, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);

  const KrausPair k = damping_kraus(-1.2566);
  const ComplexMatrix sum = matmul(k.e0.adjoint(), k.e0) + matmul(k.e1.adjoint(), k.e1);
  EXPECT_LT(max_abs_diff(sum, ComplexMatrix::identity(2)), 1e-12);

  EXPECT_THROW(damping_kraus(0.1), DomainError);
}

TEST(DampingKraus, CompletenessProperty) {
  std::mt19937_64 rng(11);
  std::exponential_distribution<double> mag(0.5);
  for (int rep = 0; rep < 1000; ++rep) {
    const KrausPair k = damping_kraus(-mag(rng));
    const ComplexMatrix sum = matmul(k.e0.adjoint(), k.e0) + matmul(k.e1.adjoint(), k.e1);
    ASSERT_LT(max_abs_diff(sum, ComplexMatrix::identity(2)), 1e-12);
  }
}

TEST(ApplyChannel, Examples) {
  for (double kappa : {0.0, -0.3, -5.0}) {
    EXPECT_LT(max_abs_diff(apply_channel(ground(), damping_kraus(kappa)).matrix(), ground().matrix()), 1e-15);
  }
  const DensityMatrix half = apply_channel(excited(), damping_kraus(std::log(1.0 / std::sqrt(2.0))));
  EXPECT_LT(max_abs_diff(half.matrix(), ComplexMatrix::diagonal({0.5, 0.5})), 1e-15);

  // Pure state: coherence scales by e^kappa, excited population by e^{2 kappa}.
  const double a = kPi / 8.0, b = kPi / 5.0, kappa = -0.5;
  ComplexMatrix ket(2, 1, {std::cos(a), std::sin(a) * std::exp(I1 * b)});
  const DensityMatrix out = apply_channel(DensityMatrix::pure(ket), damping_kraus(kappa));
  const double pe = std::cos(a) * std::cos(a) * std::exp(2 * kappa);
  EXPECT_NEAR(out(0, 0).real(), pe, 1e-15);
  EXPECT_NEAR(out(1, 1).real(), 1.0 - pe, 1e-15);
  const cplx coh = std::cos(a) * std::sin(a) * std::exp(-I1 * b) * std::exp(kappa);
  EXPECT_LT(std::abs(out(0, 1) - coh), 1e-15);
}

TEST(CollisionStep, Examples) {
  std::mt19937_64 rng(12);
  const DensityMatrix r = testing_support::random_density(2, rng);
  EXPECT_LT(max_abs_diff(collision_step(r, 0.0).matrix(), r.matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(collision_step(excited(), kPi / 3.0).matrix(), ComplexMatrix::diagonal({0.25, 0.75})),
            1e-15);
  EXPECT_THROW(collision_step(r, -0.1), DomainError);
  EXPECT_THROW(collision_step(r, 2.0), DomainError);
}

TEST(CollisionStep, EqualsKrausPathOnRandomInputs) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> th(0.0, kPi / 2.0);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const DensityMatrix r = testing_support::random_density(2, rng);
    const double theta = th(rng);
    const DensityMatrix a = collision_step(r, theta);
    const DensityMatrix b = apply_channel(r, damping_kraus(std::log(std::cos(theta))));
    worst = std::max(worst, max_abs_diff(a.matrix(), b.matrix()));
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(CollisionUnitary, IsUnitary) {
  for (double theta : {0.0, 0.3, 1.2, kPi / 2}) {
    const ComplexMatrix u = collision_unitary(theta);
    EXPECT_LT(max_abs_diff(matmul(u, u.adjoint()), ComplexMatrix::identity(4)), 1e-14);
  }
}

TEST(FrameConversion, Examples) {
  const auto [x0, y0] = frame_to_schroedinger(0.3, -0.7, 0.0, 1.0);
  EXPECT_EQ(x0, 0.3);
  EXPECT_EQ(y0, -0.7);
  const auto [x1, y1] = frame_to_schroedinger(0.3, -0.7, 2.0 * kPi, 1.0);
  EXPECT_NEAR(x1, 0.3, 1e-12);
  EXPECT_NEAR(y1, -0.7, 1e-12);
  // H = omega sigma_z / 2 precesses x towards +y.
  const auto [x2, y2] = frame_to_schroedinger(1.0, 0.0, kPi / 2.0, 1.0);
  EXPECT_NEAR(x2, 0.0, 1e-15);
  EXPECT_NEAR(y2, 1.0, 1e-15);
}

TEST(InteractionUnitary, Examples) {
  for (const InteractionSpec& s : all_families(0.0)) {
    EXPECT_LT(max_abs_diff(interaction_unitary(s), ComplexMatrix::identity(4)), 1e-15) << s.describe();
  }
  const double d = 0.37;
  const ComplexMatrix zz = interaction_unitary(InteractionSpec::native(Axis::z, d));
  const ComplexMatrix want =
      ComplexMatrix::diagonal({std::exp(-I1 * d), std::exp(I1 * d), std::exp(I1 * d), std::exp(-I1 * d)});
  EXPECT_LT(max_abs_diff(zz, want), 1e-15);

  const ComplexMatrix ps = interaction_unitary(InteractionSpec::partial_swap(kPi / 2.0));
  EXPECT_LT(max_abs_diff(ps, -I1 * swap_gate()), 1e-15);
  EXPECT_EQ(interaction_unitary(InteractionSpec::none()).rows(), 4u);
}

TEST(InteractionUnitary, UnitaryAndControlledStructure) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int rep = 0; rep < 20; ++rep) {
    const double d = u(rng);
    for (const InteractionSpec& s : all_families(d)) {
      const ComplexMatrix a = interaction_unitary(s);
      EXPECT_LT(max_abs_diff(matmul(a, a.adjoint()), ComplexMatrix::identity(4)), 1e-13) << s.describe();
    }
    for (Axis ax : {Axis::x, Axis::y, Axis::z}) {
      // Control on qubit 1 in |e>: block (0,1) x (0,1) is R(d); |g> block is identity.
      const ComplexMatrix c = interaction_unitary(InteractionSpec::controlled(ax, d, Subsystem::first));
      const ComplexMatrix r = rotation(ax, d);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          EXPECT_LT(std::abs(c(i, j) - r(i, j)), 1e-15);
          EXPECT_LT(std::abs(c(2 + i, 2 + j) - (i == j ? 1.0 : 0.0)), 1e-15);
        }
      const ComplexMatrix c2 = interaction_unitary(InteractionSpec::controlled(ax, d, Subsystem::second));
      EXPECT_LT(max_abs_diff(c2, matmul(matmul(swap_gate(), c), swap_gate())), 1e-15);
    }
  }
}

TEST(ApplyInteraction, DaggerConventionsDifferBySignOfDelta) {
  std::mt19937_64 rng(15);
  const DensityMatrix rho = testing_support::random_density(4, rng);
  for (const InteractionSpec& base : all_families(0.41)) {
    InteractionSpec paper = base;
    paper.dagger = DaggerConvention::paper;
    InteractionSpec standard = base;
    standard.dagger = DaggerConvention::standard;
    standard.delta = -base.delta;
    EXPECT_LT(max_abs_diff(apply_interaction(rho, paper).matrix(), apply_interaction(rho, standard).matrix()), 1e-14)
        << base.describe();
    EXPECT_LT(max_abs_diff(interaction_unitary(paper).adjoint(), interaction_unitary(standard)), 1e-15);
  }
}

TEST(ApplyInteraction, Examples) {
  std::mt19937_64 rng(16);
  const DensityMatrix rho = testing_support::random_density(4, rng);
  EXPECT_EQ(max_abs_diff(apply_interaction(rho, InteractionSpec::native(Axis::y, 0.0)).matrix(), rho.matrix()), 0.0);
  const DensityMatrix ee = DensityMatrix(ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0}));
  const DensityMatrix bell = apply_interaction(ee, InteractionSpec::native(Axis::y, kPi / 4.0));
  EXPECT_NEAR(concurrence(bell), 1.0, 1e-10);
  EXPECT_THROW(apply_interaction(excited(), InteractionSpec::native(Axis::y, 0.1)), DimensionError);
}

TEST(InteractionSpec, ParseAndValidate) {
  EXPECT_EQ(parse_interaction_kind("partial_swap"), InteractionKind::partial_swap);
  EXPECT_THROW(parse_interaction_kind("cnot"), DomainError);
  EXPECT_EQ(parse_dagger_convention("standard"), DaggerConvention::standard);
  InteractionSpec bad = InteractionSpec::native(Axis::x, std::nan(""));
  EXPECT_THROW(bad.validate(), DomainError);
}
