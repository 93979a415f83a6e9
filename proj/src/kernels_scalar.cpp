#include <cmath>

#include "qmem/error.hpp"
#include "qmem/kernels.hpp"

namespace qmem::kernels::scalar {

void matmul4(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* out) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double re = 0.0;
      double im = 0.0;
      for (int k = 0; k < 4; ++k) {
        const auto x = a[4 * i + k];
        const auto y = b[4 * k + j];
        re += x.real() * y.real() - x.imag() * y.imag();
        im += x.real() * y.imag() + x.imag() * y.real();
      }
      out[4 * i + j] = {re, im};
    }
  }
}

PolygonSums polygon_sums(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("polygon_sums: coordinate arrays differ in length");
  PolygonSums s;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1 == n) ? 0 : i + 1;
    s.twice_signed_area += x[i] * y[j] - x[j] * y[i];
    const double dx = x[j] - x[i];
    const double dy = y[j] - y[i];
    s.perimeter += std::sqrt(dx * dx + dy * dy);
  }
  return s;
}

}  // namespace qmem::kernels::scalar
