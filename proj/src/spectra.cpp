#include "qsep/spectra.hpp"

#include <stdexcept>

namespace qsep {

namespace {

void check_x(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x must lie in [0, 1]");
}

}  // namespace

Spectrum w_spectrum(int n_qubits, int traced, double x) {
  if (n_qubits < 2) throw std::invalid_argument("w_spectrum: N >= 2");
  if (traced < 0 || traced > n_qubits - 1) throw std::invalid_argument("w_spectrum: 0 <= n <= N-1");
  check_x(x);
  const int kept = n_qubits - traced;
  const double base = (1.0 - x) / (kept + 1);
  return Spectrum::from_entries({
      {base, kept - 1},
      {base + traced * x / n_qubits, 1},
      {base + kept * x / n_qubits, 1},
  });
}

Spectrum ghz_joint_spectrum(int n_qubits, double x) {
  if (n_qubits < 2) throw std::invalid_argument("ghz_joint_spectrum: N >= 2");
  check_x(x);
  return Spectrum::from_entries({
      {(1.0 - x) / (n_qubits + 1), n_qubits},
      {(1.0 + n_qubits * x) / (n_qubits + 1), 1},
  });
}

Spectrum ghz_marginal_spectrum(int n_qubits, double x) {
  if (n_qubits < 2) throw std::invalid_argument("ghz_marginal_spectrum: N >= 2");
  check_x(x);
  return Spectrum::from_entries({
      {(1.0 - x) / n_qubits, n_qubits - 2},
      {(2.0 + x * (n_qubits - 2)) / (2.0 * n_qubits), 2},
  });
}

Spectrum werner_spectrum(double x) {
  check_x(x);
  return Spectrum::from_entries({
      {(1.0 + 3.0 * x) / 4.0, 1},
      {(1.0 - x) / 4.0, 3},
  });
}

Spectrum maximally_mixed_qubit() { return Spectrum::from_entries({{0.5, 2}}); }

Spectrum family_spectrum(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case Family::W:
      return w_spectrum(spec.n_qubits, spec.traced, spec.x);
    case Family::Ghz:
      return spec.traced == 0 ? ghz_joint_spectrum(spec.n_qubits, spec.x)
                              : ghz_marginal_spectrum(spec.n_qubits, spec.x);
    case Family::Werner:
      return werner_spectrum(spec.x);
  }
  throw std::logic_error("unknown family");
}

std::string marginal_mode_name(MarginalMode mode) {
  return mode == MarginalMode::Exact ? "default" : "as-published";
}

SpectrumPair conditional_spectra(const FamilySpec& spec, Conditional split, MarginalMode mode) {
  spec.validate();
  if (split == Conditional::OneGivenRest) {
    if (mode == MarginalMode::AsPublished) {
      throw std::invalid_argument("as-published marginal applies to the rest-given-one conditional");
    }
    switch (spec.kind) {
      case Family::W:
        return {w_spectrum(spec.n_qubits, spec.traced, spec.x),
                w_spectrum(spec.n_qubits, spec.traced + 1, spec.x)};
      case Family::Ghz:
        if (spec.traced != 0) {
          throw std::invalid_argument(
              "no closed-form marginal for the GHZ family reduced by more than one qubit");
        }
        return {ghz_joint_spectrum(spec.n_qubits, spec.x), ghz_marginal_spectrum(spec.n_qubits, spec.x)};
      case Family::Werner:
        return {werner_spectrum(spec.x), maximally_mixed_qubit()};
    }
    throw std::logic_error("unknown family");
  }

  // RestGivenOne: joint is the whole (reduced) state, marginal one qubit.
  if (spec.kind != Family::W) {
    throw std::invalid_argument("rest-given-one conditional is defined for the W family only");
  }
  Spectrum marginal = (mode == MarginalMode::AsPublished)
                          ? maximally_mixed_qubit()
                          : w_spectrum(spec.n_qubits, spec.n_qubits - 1, spec.x);
  return {w_spectrum(spec.n_qubits, spec.traced, spec.x), std::move(marginal)};
}

SpectrumPair family_spectra(const FamilySpec& spec) {
  return conditional_spectra(spec, Conditional::OneGivenRest, MarginalMode::Exact);
}

}  // namespace qsep
