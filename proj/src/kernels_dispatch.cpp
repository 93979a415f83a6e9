#include <cstdlib>
#include <cstring>

#include "qmem/kernels.hpp"

namespace qmem::kernels {

namespace {

Isa detect() noexcept {
  if (const char* env = std::getenv("QMEM_SIMD"); env != nullptr && std::strcmp(env, "scalar") == 0) {
    return Isa::scalar;
  }
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

bool avx2_available() noexcept {
#if defined(QMEM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

const char* isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void matmul4(const std::complex<double>* a, const std::complex<double>* b, std::complex<double>* out) {
#if defined(QMEM_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::matmul4(a, b, out);
#endif
  scalar::matmul4(a, b, out);
}

PolygonSums polygon_sums(std::span<const double> x, std::span<const double> y) {
#if defined(QMEM_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::polygon_sums(x, y);
#endif
  return scalar::polygon_sums(x, y);
}

}  // namespace qmem::kernels
