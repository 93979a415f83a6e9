#pragma once

// Dense complex linear algebra for one- and two-qubit operators.
//
// Only 2x2, 4x4 and the matching column vectors (2x1, 4x1) are supported;
// ancillas are traced out after every step, so no wider register is ever
// materialized. Storage is inline (no heap), row-major.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qmem {

using cplx = std::complex<double>;

class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxEntries = 16;

  /// Zero matrix. Throws DimensionError for unsupported shapes.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Row-major entries; the count must equal rows*cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::initializer_list<cplx> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_ * cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return e_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return e_[r * cols_ + c]; }

  std::span<cplx> data() noexcept { return {e_.data(), size()}; }
  std::span<const cplx> data() const noexcept { return {e_.data(), size()}; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  cplx trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::array<cplx, kMaxEntries> e_{};
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of two 2x2 matrices; the left factor varies slowest.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * b * a^dagger, the conjugation used by every channel and gate.
ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& m, double tol);

/// Eigen-decomposition of a Hermitian matrix (dim 2 or 4). Values are sorted
/// descending; column k of `vectors` is the eigenvector of `values[k]`.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors{2, 2};
};

/// Throws DomainError when `m` deviates from Hermitian by more than 1e-10.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct DensityTolerances {
  double hermitian = 1e-12;
  double trace = 1e-10;
  double min_eigenvalue = -1e-10;
};

/// Trace-one, Hermitian, positive-semidefinite operator of dimension 2 or 4.
class DensityMatrix {
 public:
  /// Validates every invariant; throws DomainError/DimensionError otherwise.
  explicit DensityMatrix(ComplexMatrix m, const DensityTolerances& tol = {});

  /// Skips validation. For values produced by CPTP maps of valid states.
  static DensityMatrix assume_valid(ComplexMatrix m);

  /// |psi><psi| for a normalized 2x1 or 4x1 ket.
  static DensityMatrix pure(const ComplexMatrix& ket);

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  cplx operator()(std::size_t r, std::size_t c) const noexcept { return m_(r, c); }

  /// Empty string when all invariants hold, otherwise a description of the first violation.
  static std::string check(const ComplexMatrix& m, const DensityTolerances& tol = {});

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

enum class Subsystem { first = 1, second = 2 };

/// Reduced state of the kept qubit. Two-qubit index = 2*(qubit-1 index) + (qubit-2 index).
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Integer form used by file formats and the CLI; throws DomainError unless 1 or 2.
Subsystem subsystem_from_index(int index);

}  // namespace qmem
