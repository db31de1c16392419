#pragma once

#include "qsep/spectrum.hpp"

// Entropy functionals on spectra. Natural logarithm throughout; q = 1 is an
// explicit von Neumann branch, never an epsilon limit.
namespace qsep {

class QParam {
 public:
  explicit QParam(double q);  // throws unless finite and > 0
  double value() const { return q_; }
  bool is_unit() const { return q_ == 1.0; }

 private:
  double q_;
};

// -sum m_i p_i ln p_i with 0 ln 0 == 0.
double von_neumann_entropy(const Spectrum& s);

// (sum m_i p_i^q - 1) / (1 - q); von Neumann form at q = 1. 0^q == 0.
double tsallis_entropy(const Spectrum& s, QParam q);

// ln(sum m_i p_i^q) / (1 - q); von Neumann form at q = 1.
double renyi_entropy(const Spectrum& s, QParam q);

// sum m_i p_i^q / sum m_j s_j^q, evaluated in a scaled/log domain: the
// maximum eigenvalue of each spectrum is factored out so the bracketed sums
// stay in [1, dim]. Naive powers underflow to 0/0 = NaN near q ~ 700; this
// path is finite and accurate for q up to ~1e6 whenever the true ratio fits
// in a double, and overflows to infinity with the correct sign when it does
// not. This is the single evaluation path behind the conditional entropy.
double power_sum_ratio(const Spectrum& joint, const Spectrum& marginal, QParam q);

// Abe-Rajagopal q-conditional entropy:
//   q != 1 : (1/(q-1)) (1 - power_sum_ratio)
//   q == 1 : von_neumann(joint) - von_neumann(marginal)
// Negative values certify entanglement (sufficient, not necessary).
double ar_conditional_entropy(const Spectrum& joint, const Spectrum& marginal, QParam q);

}  // namespace qsep
