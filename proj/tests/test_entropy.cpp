#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qsep/entropy.hpp"
#include "qsep/spectra.hpp"

using namespace qsep;

namespace {

// Independent naive evaluation of the power-sum ratio (direct powers, no
// rescaling). Valid only while the powers stay inside double range.
double naive_power_sum_ratio(const Spectrum& joint, const Spectrum& marginal, double q) {
  auto power_sum = [&](const Spectrum& s) {
    double acc = 0.0;
    for (const auto& e : s.entries()) {
      if (e.value > 0.0) acc += e.multiplicity * std::pow(e.value, q);
    }
    return acc;
  };
  return power_sum(joint) / power_sum(marginal);
}

Spectrum random_spectrum(std::mt19937& rng) {
  std::uniform_int_distribution<int> levels(1, 5);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<SpectrumEntry> entries(levels(rng));
  double total = 0.0;
  for (auto& e : entries) {
    e.value = weight(rng);
    e.multiplicity = mult(rng);
    total += e.value * e.multiplicity;
  }
  for (auto& e : entries) e.value /= total;
  return Spectrum::from_entries(std::move(entries));
}

const Spectrum kPure = Spectrum::from_entries({{1.0, 1}, {0.0, 3}});
const Spectrum kFlatQubit = Spectrum::from_entries({{0.5, 2}});

}  // namespace

TEST_CASE("QParam rejects non-positive q") {
  CHECK_THROWS_AS(QParam(0.0), std::invalid_argument);
  CHECK_THROWS_AS(QParam(-2.0), std::invalid_argument);
  CHECK_NOTHROW(QParam(1e-6));
}

TEST_CASE("tsallis entropy basics") {
  for (double q : {0.5, 1.0, 2.0, 10.0}) {
    CHECK(tsallis_entropy(kPure, QParam(q)) == 0.0);
  }
  CHECK(tsallis_entropy(kFlatQubit, QParam(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("tsallis entropy is continuous through the q = 1 branch") {
  const Spectrum s = w_spectrum(2, 0, 0.5);
  const double vn = von_neumann_entropy(s);
  CHECK(std::fabs(tsallis_entropy(s, QParam(1.0 + 1e-4)) - vn) < 1e-3);
  CHECK(std::fabs(tsallis_entropy(s, QParam(1.0 - 1e-4)) - vn) < 1e-3);
  CHECK(tsallis_entropy(s, QParam(1.0)) == vn);
}

TEST_CASE("renyi entropy basics") {
  for (double q : {0.3, 2.0, 50.0}) {
    CHECK(std::fabs(renyi_entropy(kFlatQubit, QParam(q)) - std::log(2.0)) < 1e-14);
    CHECK(std::fabs(renyi_entropy(kPure, QParam(q))) < 1e-14);
  }
}

TEST_CASE("von Neumann entropy basics") {
  CHECK(std::fabs(von_neumann_entropy(kFlatQubit) - std::log(2.0)) < 1e-15);
  CHECK(von_neumann_entropy(Spectrum::from_entries({{1.0, 1}, {0.0, 1}})) == 0.0);
  // The two-qubit family condition S(joint) = ln 2 has its root at 0.6594.
  CHECK(std::fabs(von_neumann_entropy(w_spectrum(2, 0, 0.6593)) - std::log(2.0)) < 1e-3);
}

TEST_CASE("power_sum_ratio of identical spectra is one") {
  std::mt19937 rng(31);
  for (int i = 0; i < 10; ++i) {
    const Spectrum s = random_spectrum(rng);
    for (double q : {0.5, 1.0, 3.0, 300.0}) {
      CHECK(std::fabs(power_sum_ratio(s, s, QParam(q)) - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("scaled power-sum ratio matches the naive evaluation at moderate q") {
  const Spectrum joint = w_spectrum(2, 0, 0.3);
  const Spectrum marginal = kFlatQubit;
  for (double q : {0.4, 2.0, 5.0, 25.0}) {
    const double scaled = power_sum_ratio(joint, marginal, QParam(q));
    const double naive = naive_power_sum_ratio(joint, marginal, q);
    CHECK(std::fabs(scaled - naive) <= 1e-12 * std::fabs(naive));
  }
}

TEST_CASE("power_sum_ratio stays finite and accurate at q = 1000 and beyond") {
  const Spectrum joint = w_spectrum(2, 0, 0.3);   // max level 1.6/3
  const Spectrum marginal = kFlatQubit;           // max level 1/2
  const double q = 1000.0;
  const double r = power_sum_ratio(joint, marginal, QParam(q));
  CHECK(std::isfinite(r));
  // Hand log-domain formula: q ln(p_max/s_max) + ln(sum_j (p_j/p_max)^q) - ln 2.
  const double p_max = (1.0 + 2.0 * 0.3) / 3.0;
  const double sub = 2.0 * std::pow(((1.0 - 0.3) / 3.0) / p_max, q);
  const double expected_log = q * std::log(p_max / 0.5) + std::log1p(sub) - std::log(2.0);
  CHECK(std::fabs(std::log(r) - expected_log) <= 1e-9 * std::fabs(expected_log));

  // q = 1e6: the naive path underflows to 0/0 = NaN long before this; the
  // scaled path stays finite whenever the true value fits in a double...
  const Spectrum near_boundary = w_spectrum(2, 0, 0.2502);
  const double r6 = power_sum_ratio(near_boundary, marginal, QParam(1e6));
  CHECK(std::isfinite(r6));
  CHECK(std::fabs(std::log(r6) - 1e6 * std::log(near_boundary.max_value() / 0.5) + std::log(2.0)) <
        1e-6 * std::fabs(std::log(r6)));
  // ...and overflows to +infinity with the sign intact when it does not
  // (here the true ratio is e^64539), so the conditional entropy still
  // reports the correct side of the boundary.
  const double huge = power_sum_ratio(joint, marginal, QParam(1e6));
  CHECK(std::isinf(huge));
  CHECK(!std::isnan(huge));
  CHECK(ar_conditional_entropy(joint, marginal, QParam(1e6)) < 0.0);
}

TEST_CASE("ar_conditional_entropy frozen values for the two-qubit W family") {
  // x = 0, q = 2: joint {1/3 x3, 0}, marginal {1/2 x2} -> 1 - (1/3)/(1/2) = 1/3.
  CHECK(std::fabs(ar_conditional_entropy(w_spectrum(2, 0, 0.0), kFlatQubit, QParam(2.0)) -
                  1.0 / 3.0) < 1e-14);
  // q = 2 root of the family condition: 3 + 6x^2 = 4.5 at x = 1/2.
  CHECK(std::fabs(ar_conditional_entropy(w_spectrum(2, 0, 0.5), kFlatQubit, QParam(2.0))) < 1e-14);
}

TEST_CASE("pure joint spectrum gives negative conditional entropy for q > 1") {
  for (double q : {1.5, 2.0, 10.0, 500.0}) {
    CHECK(ar_conditional_entropy(kPure, kFlatQubit, QParam(q)) < 0.0);
  }
}

TEST_CASE("conditional entropy is strictly positive at x = 0 on every family") {
  const std::vector<SpectrumPair> pairs = {
      family_spectra({Family::W, 2, 0, 0.0}),     family_spectra({Family::W, 3, 0, 0.0}),
      family_spectra({Family::W, 5, 2, 0.0}),     family_spectra({Family::Ghz, 3, 0, 0.0}),
      family_spectra({Family::Ghz, 6, 0, 0.0}),   family_spectra({Family::Werner, 2, 0, 0.0}),
  };
  for (const auto& pair : pairs) {
    for (double q : {0.2, 0.9, 1.0, 1.1, 4.0, 100.0}) {
      CHECK(ar_conditional_entropy(pair.joint, pair.marginal, QParam(q)) > 0.0);
    }
  }
}

TEST_CASE("pseudo-additivity holds on random product spectra") {
  std::mt19937 rng(32);
  for (int i = 0; i < 100; ++i) {
    const Spectrum a = random_spectrum(rng);
    const Spectrum b = random_spectrum(rng);
    const Spectrum ab = tensor_product(a, b);
    for (double qv : {0.5, 1.0, 2.0, 4.0}) {
      const QParam q(qv);
      const double sa = tsallis_entropy(a, q);
      const double sb = tsallis_entropy(b, q);
      CHECK(std::fabs(tsallis_entropy(ab, q) - (sa + sb + (1.0 - qv) * sa * sb)) < 1e-10);
    }
  }
}

TEST_CASE("renyi entropy is additive on product spectra") {
  std::mt19937 rng(33);
  for (int i = 0; i < 50; ++i) {
    const Spectrum a = random_spectrum(rng);
    const Spectrum b = random_spectrum(rng);
    const Spectrum ab = tensor_product(a, b);
    for (double qv : {0.5, 2.0, 7.0}) {
      const QParam q(qv);
      CHECK(std::fabs(renyi_entropy(ab, q) - (renyi_entropy(a, q) + renyi_entropy(b, q))) < 1e-10);
    }
  }
}

TEST_CASE("Tsallis and Renyi conditional signs agree on the W2 pair") {
  for (int qi = 0; qi <= 40; ++qi) {
    const double qv = 0.2 + qi * 0.245;  // 0.2 .. 10
    const QParam q(qv);
    for (int xi = 0; xi <= 20; ++xi) {
      const double x = static_cast<double>(xi) / 20;
      const Spectrum joint = w_spectrum(2, 0, x);
      const double ar = ar_conditional_entropy(joint, kFlatQubit, q);
      const double rd = renyi_entropy(joint, q) - renyi_entropy(kFlatQubit, q);
      if (std::fabs(ar) <= 1e-12 || std::fabs(rd) <= 1e-12) continue;
      CHECK((ar > 0.0) == (rd > 0.0));
    }
  }
}

TEST_CASE("zero eigenvalues contribute nothing for q below one") {
  const Spectrum with_zeros = Spectrum::from_entries({{0.5, 2}, {0.0, 6}});
  for (double q : {0.2, 0.7}) {
    CHECK(tsallis_entropy(with_zeros, QParam(q)) == tsallis_entropy(kFlatQubit, QParam(q)));
  }
  // Clamping pushes eigensolver noise onto the exact-zero branch.
  const Spectrum noisy = Spectrum::from_values({0.5, 0.5, 3e-10, -3e-10});
  const Spectrum clamped = noisy.clamped();
  CHECK(clamped.entries().back().value == 0.0);
  CHECK(tsallis_entropy(clamped, QParam(0.5)) == tsallis_entropy(kFlatQubit, QParam(0.5)));
}
