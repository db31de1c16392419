#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the dense linear-algebra code.
//
// Every kernel exists in a scalar reference form and (on x86-64 builds that
// support it) an AVX2 form. Both forms perform the identical per-element
// operation sequence, so results are bit-exact across backends; the dispatch
// table is selected once at startup. Set QSEP_SIMD=scalar|avx2 to override.
namespace qsep::kernels {

// In-place plane rotation of two equal-length arrays:
//   x[i] <- c*x[i] - s*y[i]
//   y[i] <- s*x[i] + c*y[i]
using RotatePairFn = void (*)(double* x, double* y, std::size_t n, double c, double s);

// max_i |a[i]|; zero for n == 0.
using AbsMaxFn = double (*)(const double* a, std::size_t n);

// max_i |a[i] - b[i]|; zero for n == 0.
using MaxAbsDiffFn = double (*)(const double* a, const double* b, std::size_t n);

struct Kernels {
  RotatePairFn rotate_pair;
  AbsMaxFn abs_max;
  MaxAbsDiffFn max_abs_diff;
  const char* name;
};

const Kernels& scalar();

bool avx2_compiled();   // this build carries the AVX2 translation unit
bool avx2_supported();  // compiled in and the CPU reports AVX2
const Kernels& avx2();  // throws std::runtime_error if unsupported

// Backend chosen at first use: QSEP_SIMD env override, else AVX2 when
// supported, else scalar. Stable for the lifetime of the process.
const Kernels& active();

}  // namespace qsep::kernels
