#pragma once

// Hot inner loops with a scalar reference and an AVX2/FMA variant.
//
// The active variant is chosen once per process from the CPU feature bits.
// Setting QMEM_SIMD=scalar in the environment forces the reference path.
// Both variants are exposed by name so tests can compare them directly.

#include <complex>
#include <span>

namespace qmem::kernels {

enum class Isa { scalar, avx2 };

struct PolygonSums {
  double twice_signed_area = 0.0;  // sum of x_i*y_{i+1} - x_{i+1}*y_i over the closed polygon
  double perimeter = 0.0;
};

namespace scalar {
/// out = a * b for row-major 4x4 complex matrices. `out` must not alias the inputs.
void matmul4(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* out);
PolygonSums polygon_sums(std::span<const double> x, std::span<const double> y);
}  // namespace scalar

#if defined(QMEM_HAVE_AVX2)
namespace avx2 {
void matmul4(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* out);
PolygonSums polygon_sums(std::span<const double> x, std::span<const double> y);
}  // namespace avx2
#endif

/// True when the binary carries the AVX2 variant and the CPU can run it.
bool avx2_available() noexcept;

Isa active_isa() noexcept;
const char* isa_name(Isa isa) noexcept;

void matmul4(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* out);
PolygonSums polygon_sums(std::span<const double> x, std::span<const double> y);

}  // namespace qmem::kernels
