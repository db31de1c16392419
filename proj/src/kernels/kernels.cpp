#include "qsep/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace qsep::kernels {

#if defined(QSEP_HAVE_AVX2)
const Kernels& avx2_table();  // kernels_avx2.cpp
#endif

bool avx2_compiled() {
#if defined(QSEP_HAVE_AVX2)
  return true;
#else
  return false;
#endif
}

bool avx2_supported() {
#if defined(QSEP_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Kernels& avx2() {
#if defined(QSEP_HAVE_AVX2)
  if (avx2_supported()) return avx2_table();
#endif
  throw std::runtime_error("AVX2 kernels are not available on this build/CPU");
}

namespace {

const Kernels& pick() {
  if (const char* env = std::getenv("QSEP_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return scalar();
    if (std::strcmp(env, "avx2") == 0) return avx2();
    throw std::runtime_error("QSEP_SIMD must be 'scalar' or 'avx2'");
  }
  return avx2_supported() ? avx2() : scalar();
}

}  // namespace

const Kernels& active() {
  static const Kernels& chosen = pick();
  return chosen;
}

}  // namespace qsep::kernels
