#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qsep/kernels.hpp"

using namespace qsep;

namespace {

std::vector<double> random_array(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("rotate_pair matches a plain loop") {
  std::mt19937 rng(11);
  const auto& K = kernels::active();
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{5}, std::size_t{64}}) {
    auto x = random_array(rng, n);
    auto y = random_array(rng, n);
    auto xr = x;
    auto yr = y;
    const double c = 0.8, s = 0.6;
    K.rotate_pair(x.data(), y.data(), n, c, s);
    for (std::size_t i = 0; i < n; ++i) {
      const double xi = xr[i], yi = yr[i];
      xr[i] = c * xi - s * yi;
      yr[i] = s * xi + c * yi;
    }
    CHECK(x == xr);
    CHECK(y == yr);
  }
}

TEST_CASE("abs_max and max_abs_diff agree with direct scans") {
  std::mt19937 rng(12);
  const auto& K = kernels::active();
  const auto a = random_array(rng, 257);
  const auto b = random_array(rng, 257);
  double am = 0.0, dm = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    am = std::max(am, std::fabs(a[i]));
    dm = std::max(dm, std::fabs(a[i] - b[i]));
  }
  CHECK(K.abs_max(a.data(), a.size()) == am);
  CHECK(K.max_abs_diff(a.data(), b.data(), a.size()) == dm);
  CHECK(K.abs_max(a.data(), 0) == 0.0);
}

TEST_CASE("AVX2 backend is bit-exact against the scalar reference") {
  if (!kernels::avx2_supported()) {
    MESSAGE("AVX2 unavailable; skipping equivalence checks");
    return;
  }
  const auto& S = kernels::scalar();
  const auto& V = kernels::avx2();
  std::mt19937 rng(13);
  // Sizes straddling the vector width, including ragged tails.
  for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{4}, std::size_t{7},
                        std::size_t{8}, std::size_t{31}, std::size_t{128}, std::size_t{1001}}) {
    auto xs = random_array(rng, n);
    auto ys = random_array(rng, n);
    auto xv = xs;
    auto yv = ys;
    const double c = -0.3141, s = 0.9494;
    S.rotate_pair(xs.data(), ys.data(), n, c, s);
    V.rotate_pair(xv.data(), yv.data(), n, c, s);
    CHECK(xs == xv);
    CHECK(ys == yv);
    CHECK(S.abs_max(xs.data(), n) == V.abs_max(xv.data(), n));
    CHECK(S.max_abs_diff(xs.data(), ys.data(), n) == V.max_abs_diff(xv.data(), yv.data(), n));
  }
}

TEST_CASE("active backend reports a name") {
  CHECK(kernels::active().name != nullptr);
  if (kernels::avx2_compiled() && kernels::avx2_supported()) {
    CHECK(std::string(kernels::avx2().name) == "avx2");
  }
  CHECK(std::string(kernels::scalar().name) == "scalar");
}
