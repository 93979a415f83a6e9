#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "qmem/linalg.hpp"

namespace testing_support {

using qmem::cplx;

inline qmem::ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  qmem::ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {g(rng), g(rng)};
  return m;
}

// G G^dagger / Tr, full rank with probability one.
inline qmem::DensityMatrix random_density(std::size_t n, std::mt19937_64& rng) {
  const qmem::ComplexMatrix g = random_matrix(n, rng);
  qmem::ComplexMatrix rho = qmem::matmul(g, g.adjoint());
  rho *= cplx(1.0 / rho.trace().real());
  return qmem::DensityMatrix(rho);
}

inline Eigen::MatrixXcd to_eigen(const qmem::ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

// sqrt of the eigenvalues of rho (sy(x)sy) rho* (sy(x)sy), computed by a
// general complex eigensolver.
inline double brute_force_concurrence(const qmem::ComplexMatrix& rho) {
  const Eigen::MatrixXcd r = to_eigen(rho);
  Eigen::Matrix2cd sy;
  sy << 0.0, cplx(0, -1), cplx(0, 1), 0.0;
  Eigen::Matrix4cd flip;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) flip(2 * i + k, 2 * j + l) = sy(i, j) * sy(k, l);
  // lambda_k are the singular values of sqrt(rho) sqrt(rho~), with
  // sqrt(rho~) = flip sqrt(rho)* flip.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r);
  const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXcd root = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  const Eigen::MatrixXcd root_tilde = flip * root.conjugate() * flip;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(root * root_tilde);
  std::vector<double> lam(4);
  for (int k = 0; k < 4; ++k) lam[k] = svd.singularValues()(k);
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

}  // namespace testing_support
