// AVX2 variants of the kernels. Compiled with -mavx2 only; the dispatch in
// kernels.cpp never hands these out unless the CPU reports AVX2 support.
//
// The vector bodies use separate mul/add/sub (no FMA), so each element sees
// the same rounding sequence as the scalar reference and results match it
// bit for bit.

#include "qsep/kernels.hpp"

#if defined(QSEP_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace qsep::kernels {

namespace {

void rotate_pair_avx2(double* x, double* y, std::size_t n, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(x + i, _mm256_sub_pd(_mm256_mul_pd(vc, xv), _mm256_mul_pd(vs, yv)));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_mul_pd(vs, xv), _mm256_mul_pd(vc, yv)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

// |v| via sign-bit mask; max is order-independent, so the lane-wise
// reduction is exact.
inline __m256d abs_pd(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

inline double hmax_pd(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m2 = _mm_max_pd(lo, hi);
  const __m128d m1 = _mm_max_sd(m2, _mm_unpackhi_pd(m2, m2));
  return _mm_cvtsd_f64(m1);
}

double abs_max_avx2(const double* a, std::size_t n) {
  __m256d vm = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vm = _mm256_max_pd(vm, abs_pd(_mm256_loadu_pd(a + i)));
  }
  double m = hmax_pd(vm);
  for (; i < n; ++i) {
    const double v = std::fabs(a[i]);
    if (v > m) m = v;
  }
  return m;
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d vm = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    vm = _mm256_max_pd(vm, abs_pd(d));
  }
  double m = hmax_pd(vm);
  for (; i < n; ++i) {
    const double v = std::fabs(a[i] - b[i]);
    if (v > m) m = v;
  }
  return m;
}

}  // namespace

const Kernels& avx2_table() {
  static const Kernels table{rotate_pair_avx2, abs_max_avx2, max_abs_diff_avx2, "avx2"};
  return table;
}

}  // namespace qsep::kernels

#endif  // QSEP_HAVE_AVX2
