#pragma once

#include "qsep/family.hpp"
#include "qsep/spectrum.hpp"

// Closed-form eigenvalue generators for every family and reduction in the
// library. These avoid matrix construction entirely; the `states` + `hermit`
// path recomputes each of them by brute force in the verification suite.
namespace qsep {

// Spectrum of the W family on N qubits with n of them traced out
// (n = 0 .. N-1). Nonzero levels:
//   (1-x)/(N-n+1)                with multiplicity N-n-1
//   (1-x)/(N-n+1) + n x / N
//   (1-x)/(N-n+1) + (N-n) x / N
// Coinciding levels (x = 0, n = 0, ...) are merged by exact comparison.
Spectrum w_spectrum(int n_qubits, int traced, double x);

// Full GHZ family state on N qubits: { (1-x)/(N+1) xN, (1+Nx)/(N+1) }.
Spectrum ghz_joint_spectrum(int n_qubits, double x);

// One qubit traced from the GHZ family state:
// { (1-x)/N x(N-2), (2 + x(N-2))/(2N) x2 }.
Spectrum ghz_marginal_spectrum(int n_qubits, double x);

// Two-qubit Werner state: { (1+3x)/4, (1-x)/4 x3 }.
Spectrum werner_spectrum(double x);

// { 1/2 x2 } - single-qubit maximally mixed spectrum.
Spectrum maximally_mixed_qubit();

// Closed-form spectrum of the (possibly reduced) family state itself.
Spectrum family_spectrum(const FamilySpec& spec);

struct SpectrumPair {
  Spectrum joint;
  Spectrum marginal;
};

// Which subsystem the conditional entropy conditions away.
//   OneGivenRest: S(A1 | A2...Am)  - marginal drops one qubit (default chain)
//   RestGivenOne: S(A1...Am-1 | Am) - marginal is a single qubit (W family)
enum class Conditional { OneGivenRest, RestGivenOne };

// Single-qubit marginal convention for the RestGivenOne denominator.
// Exact uses the true reduced spectrum; AsPublished substitutes the
// maximally mixed {1/2 x2}. The two agree for two qubits but differ for the
// larger W families, whose exact single-qubit levels are 1/2 +- x(N-2)/(2N);
// the substitution shifts the q -> infinity tail (1/3 instead of 3/7 at
// N = 3) and exists to reproduce that convention on demand.
enum class MarginalMode { Exact, AsPublished };

std::string marginal_mode_name(MarginalMode mode);  // "default" / "as-published"

SpectrumPair conditional_spectra(const FamilySpec& spec, Conditional split,
                                 MarginalMode mode = MarginalMode::Exact);

// Default pairing feeding the conditional-entropy chain (OneGivenRest).
SpectrumPair family_spectra(const FamilySpec& spec);

}  // namespace qsep
