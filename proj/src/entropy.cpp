#include "qsep/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace qsep {

QParam::QParam(double q) : q_(q) {
  if (!std::isfinite(q) || q <= 0.0) throw std::invalid_argument("entropic index q must be > 0");
}

namespace {

// sum m_i p_i^q; entries <= 0 contribute nothing (continuous extension of
// 0^q for q > 0, and clamped-negative eigenvalues likewise).
double power_sum(const Spectrum& s, double q) {
  double acc = 0.0;
  for (const auto& e : s.entries()) {
    if (e.value <= 0.0) continue;
    acc += e.multiplicity * std::pow(e.value, q);
  }
  return acc;
}

// ln(sum m_i p_i^q) = q ln(p_max) + ln(sum m_i (p_i/p_max)^q); the rescaled
// sum lies in [1, total multiplicity] for any q > 0.
double log_power_sum(const Spectrum& s, double q) {
  const double pmax = s.max_value();
  if (!(pmax > 0.0)) throw std::invalid_argument("spectrum has no positive weight");
  double acc = 0.0;
  for (const auto& e : s.entries()) {
    if (e.value <= 0.0) continue;
    acc += e.multiplicity * std::pow(e.value / pmax, q);
  }
  return q * std::log(pmax) + std::log(acc);
}

}  // namespace

double von_neumann_entropy(const Spectrum& s) {
  double acc = 0.0;
  for (const auto& e : s.entries()) {
    if (e.value <= 0.0) continue;
    acc -= e.multiplicity * e.value * std::log(e.value);
  }
  return acc;
}

double tsallis_entropy(const Spectrum& s, QParam q) {
  if (q.is_unit()) return von_neumann_entropy(s);
  return (power_sum(s, q.value()) - 1.0) / (1.0 - q.value());
}

double renyi_entropy(const Spectrum& s, QParam q) {
  if (q.is_unit()) return von_neumann_entropy(s);
  return log_power_sum(s, q.value()) / (1.0 - q.value());
}

double power_sum_ratio(const Spectrum& joint, const Spectrum& marginal, QParam q) {
  return std::exp(log_power_sum(joint, q.value()) - log_power_sum(marginal, q.value()));
}

double ar_conditional_entropy(const Spectrum& joint, const Spectrum& marginal, QParam q) {
  if (q.is_unit()) return von_neumann_entropy(joint) - von_neumann_entropy(marginal);
  return (1.0 - power_sum_ratio(joint, marginal, q)) / (q.value() - 1.0);
}

}  // namespace qsep
