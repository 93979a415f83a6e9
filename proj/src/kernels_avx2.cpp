#include <immintrin.h>

#include <cmath>

#include "qmem/error.hpp"
#include "qmem/kernels.hpp"

namespace qmem::kernels::avx2 {

// A __m256d holds two complex<double> as (re0, im0, re1, im1).
void matmul4(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* out) {
  const double* bp = reinterpret_cast<const double*>(b);
  double* op = reinterpret_cast<double*>(out);
  __m256d brow[4][2];
  __m256d bswap[4][2];
  for (int k = 0; k < 4; ++k) {
    brow[k][0] = _mm256_loadu_pd(bp + 8 * k);
    brow[k][1] = _mm256_loadu_pd(bp + 8 * k + 4);
    bswap[k][0] = _mm256_permute_pd(brow[k][0], 0b0101);
    bswap[k][1] = _mm256_permute_pd(brow[k][1], 0b0101);
  }
  for (int i = 0; i < 4; ++i) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (int k = 0; k < 4; ++k) {
      const __m256d re = _mm256_set1_pd(a[4 * i + k].real());
      const __m256d im = _mm256_set1_pd(a[4 * i + k].imag());
      // (re*br - im*bi, re*bi + im*br)
      acc0 = _mm256_add_pd(acc0, _mm256_fmaddsub_pd(re, brow[k][0], _mm256_mul_pd(im, bswap[k][0])));
      acc1 = _mm256_add_pd(acc1, _mm256_fmaddsub_pd(re, brow[k][1], _mm256_mul_pd(im, bswap[k][1])));
    }
    _mm256_storeu_pd(op + 8 * i, acc0);
    _mm256_storeu_pd(op + 8 * i + 4, acc1);
  }
}

PolygonSums polygon_sums(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("polygon_sums: coordinate arrays differ in length");
  const std::size_t n = x.size();
  PolygonSums s;
  if (n == 0) return s;
  // Vector body covers edges i -> i+1 for i + 4 < n; the tail and the
  // closing edge go through the scalar loop.
  __m256d area = _mm256_setzero_pd();
  __m256d perim = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 < n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(x.data() + i);
    const __m256d y0 = _mm256_loadu_pd(y.data() + i);
    const __m256d x1 = _mm256_loadu_pd(x.data() + i + 1);
    const __m256d y1 = _mm256_loadu_pd(y.data() + i + 1);
    area = _mm256_add_pd(area, _mm256_fmsub_pd(x0, y1, _mm256_mul_pd(x1, y0)));
    const __m256d dx = _mm256_sub_pd(x1, x0);
    const __m256d dy = _mm256_sub_pd(y1, y0);
    perim = _mm256_add_pd(perim, _mm256_sqrt_pd(_mm256_fmadd_pd(dx, dx, _mm256_mul_pd(dy, dy))));
  }
  alignas(32) double la[4];
  alignas(32) double lp[4];
  _mm256_store_pd(la, area);
  _mm256_store_pd(lp, perim);
  s.twice_signed_area = (la[0] + la[1]) + (la[2] + la[3]);
  s.perimeter = (lp[0] + lp[1]) + (lp[2] + lp[3]);
  for (; i < n; ++i) {
    const std::size_t j = (i + 1 == n) ? 0 : i + 1;
    s.twice_signed_area += x[i] * y[j] - x[j] * y[i];
    const double dx = x[j] - x[i];
    const double dy = y[j] - y[i];
    s.perimeter += std::sqrt(dx * dx + dy * dy);
  }
  return s;
}

}  // namespace qmem::kernels::avx2
