#include "qmem/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "qmem/error.hpp"
#include "qmem/kernels.hpp"

namespace qmem {

namespace {

bool supported_shape(std::size_t rows, std::size_t cols) {
  return (rows == 2 || rows == 4) && (cols == rows || cols == 1);
}

std::string shape_str(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (!supported_shape(rows, cols)) {
    throw DimensionError("unsupported matrix shape " + shape_str(rows, cols));
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries)
    : ComplexMatrix(rows, cols) {
  if (entries.size() != size()) {
    throw DimensionError("expected " + std::to_string(size()) + " entries for a " + shape_str(rows, cols) +
                         " matrix, got " + std::to_string(entries.size()));
  }
  std::copy(entries.begin(), entries.end(), e_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  std::size_t i = 0;
  for (const auto& d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  if (!is_square()) throw DimensionError("adjoint of a column vector is not representable");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& v : out.data()) v = std::conj(v);
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch in addition");
  for (std::size_t i = 0; i < size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch in subtraction");
  for (std::size_t i = 0; i < size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) noexcept {
  for (std::size_t i = 0; i < size(); ++i) e_[i] *= s;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + shape_str(a.rows(), a.cols()) + " by " +
                         shape_str(b.rows(), b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  if (a.rows() == 4 && b.cols() == 4) {
    kernels::matmul4(a.data().data(), b.data().data(), out.data().data());
    return out;
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw DimensionError("kron expects two 2x2 factors");
  }
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(matmul(a, b), a.adjoint());
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch in comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
  return true;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("eigenvalues of a non-square matrix");
  if (!is_hermitian(m, 1e-10)) throw DomainError("hermitian_eigen: input is not Hermitian");
  const std::size_t n = m.rows();

  HermitianEigen out;
  if (n == 2) {
    // Closed form: lambda = mean +- sqrt(half_diff^2 + |off|^2).
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const cplx b = m(0, 1);
    const double mean = 0.5 * (a + d);
    const double half = 0.5 * (a - d);
    const double rad = std::hypot(half, std::abs(b));
    out.values = {mean + rad, mean - rad};
    ComplexMatrix v(2, 2);
    if (std::abs(b) <= 1e-300) {
      // Already diagonal; order columns by the descending values.
      if (a >= d) {
        v(0, 0) = 1.0;
        v(1, 1) = 1.0;
      } else {
        v(1, 0) = 1.0;
        v(0, 1) = 1.0;
      }
    } else {
      for (std::size_t k = 0; k < 2; ++k) {
        // (A - lambda) x = 0  ->  x = (b, lambda - a)
        cplx x0 = b;
        cplx x1 = out.values[k] - a;
        if (std::abs(x1) < 1e-300 && std::abs(x0) < 1e-300) x1 = 1.0;
        const double norm = std::sqrt(std::norm(x0) + std::norm(x1));
        v(0, k) = x0 / norm;
        v(1, k) = x1 / norm;
      }
    }
    out.vectors = v;
    return out;
  }

  // Cyclic complex Jacobi. Each rotation zeroes one off-diagonal pair.
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(max_abs(a), 1e-300);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-17 * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        const cplx phase = a(p, q) / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U = diag(1, conj(phase)) on (p, q) followed by a real rotation.
        ComplexMatrix u = ComplexMatrix::identity(n);
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * std::conj(phase);
        u(q, q) = c * std::conj(phase);
        a = matmul(matmul(u.adjoint(), a), u);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
        v = matmul(v, u);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  ComplexMatrix sorted(n, n);
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) sorted(r, k) = v(r, order[k]);
  }
  out.vectors = sorted;
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eigen(m).values; }

std::string DensityMatrix::check(const ComplexMatrix& m, const DensityTolerances& tol) {
  if (!m.is_square()) return "density matrix must be square";
  double herm = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) herm = std::max(herm, std::abs(m(r, c) - std::conj(m(c, r))));
  if (herm > tol.hermitian) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (max deviation " << herm << ")";
    return os.str();
  }
  const cplx tr = m.trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream os;
    os << "density matrix trace is " << tr.real() << ", expected 1";
    return os.str();
  }
  // Symmetrize before diagonalizing so tolerance-level asymmetry is accepted.
  ComplexMatrix h = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  const double lowest = hermitian_eigenvalues(h).back();
  if (lowest < tol.min_eigenvalue) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << lowest;
    return os.str();
  }
  return {};
}

DensityMatrix::DensityMatrix(ComplexMatrix m, const DensityTolerances& tol) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionError("density matrix must be square");
  if (const auto why = check(m_, tol); !why.empty()) throw DomainError(why);
}

DensityMatrix DensityMatrix::assume_valid(ComplexMatrix m) { return DensityMatrix(std::move(m), Unchecked{}); }

DensityMatrix DensityMatrix::pure(const ComplexMatrix& ket) {
  if (ket.cols() != 1) throw DimensionError("pure state expects a column vector");
  double norm = 0.0;
  for (const auto& v : ket.data()) norm += std::norm(v);
  if (std::abs(norm - 1.0) > 1e-10) throw DomainError("pure state ket is not normalized");
  ComplexMatrix rho(ket.rows(), ket.rows());
  for (std::size_t r = 0; r < ket.rows(); ++r)
    for (std::size_t c = 0; c < ket.rows(); ++c) rho(r, c) = ket(r, 0) * std::conj(ket(c, 0));
  return assume_valid(rho);
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::assume_valid(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) throw DimensionError("partial_trace expects a two-qubit state");
  ComplexMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        if (keep == Subsystem::first) {
          out(i, j) += rho(2 * i + k, 2 * j + k);
        } else {
          out(i, j) += rho(2 * k + i, 2 * k + j);
        }
      }
  return DensityMatrix::assume_valid(out);
}

Subsystem subsystem_from_index(int index) {
  if (index == 1) return Subsystem::first;
  if (index == 2) return Subsystem::second;
  throw DomainError("subsystem index must be 1 or 2, got " + std::to_string(index));
}

}  // namespace qmem
