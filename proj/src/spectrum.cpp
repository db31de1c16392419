#include "qsep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsep/format.hpp"

namespace qsep {

Spectrum Spectrum::from_entries(std::vector<SpectrumEntry> entries) {
  std::erase_if(entries, [](const SpectrumEntry& e) { return e.multiplicity == 0; });
  for (const auto& e : entries) {
    if (e.multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    if (!std::isfinite(e.value)) throw std::invalid_argument("non-finite spectrum value");
  }
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
  Spectrum s;
  for (const auto& e : entries) {
    if (!s.entries_.empty() && s.entries_.back().value == e.value) {
      s.entries_.back().multiplicity += e.multiplicity;
    } else {
      s.entries_.push_back(e);
    }
  }
  return s;
}

Spectrum Spectrum::from_values(std::vector<double> values, double merge_tol) {
  std::sort(values.begin(), values.end(), std::greater<double>());
  Spectrum s;
  double group_head = 0.0;
  double group_sum = 0.0;
  int group_count = 0;
  auto flush = [&] {
    if (group_count > 0) s.entries_.push_back({group_sum / group_count, group_count});
  };
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite eigenvalue");
    if (group_count > 0 && std::fabs(v - group_head) <= merge_tol) {
      group_sum += v;
      ++group_count;
    } else {
      flush();
      group_head = v;
      group_sum = v;
      group_count = 1;
    }
  }
  flush();
  return s;
}

int Spectrum::total_multiplicity() const {
  int t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

double Spectrum::weighted_sum() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.value * e.multiplicity;
  return s;
}

double Spectrum::max_value() const {
  if (entries_.empty()) throw std::logic_error("empty spectrum");
  return entries_.front().value;
}

std::vector<double> Spectrum::expand(std::size_t pad_to) const {
  std::vector<double> out;
  out.reserve(std::max<std::size_t>(pad_to, total_multiplicity()));
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  std::sort(out.begin(), out.end(), std::greater<double>());
  while (out.size() < pad_to) out.push_back(0.0);
  return out;
}

Spectrum Spectrum::clamped(double zero_tol) const {
  std::vector<SpectrumEntry> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) {
    entries.push_back({std::fabs(e.value) <= zero_tol ? 0.0 : e.value, e.multiplicity});
  }
  return from_entries(std::move(entries));
}

std::string Spectrum::to_csv() const {
  std::string out = "value,multiplicity\n";
  for (const auto& e : entries_) {
    out += format_g12(e.value);
    out += ',';
    out += std::to_string(e.multiplicity);
    out += '\n';
  }
  return out;
}

nlohmann::json Spectrum::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries_) {
    arr.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  }
  return arr;
}

Spectrum tensor_product(const Spectrum& a, const Spectrum& b) {
  std::vector<SpectrumEntry> entries;
  entries.reserve(a.entries().size() * b.entries().size());
  for (const auto& ea : a.entries()) {
    for (const auto& eb : b.entries()) {
      entries.push_back({ea.value * eb.value, ea.multiplicity * eb.multiplicity});
    }
  }
  return Spectrum::from_entries(std::move(entries));
}

double max_spectrum_diff(const Spectrum& a, const Spectrum& b) {
  const std::size_t n = std::max(a.expand().size(), b.expand().size());
  const std::vector<double> va = a.expand(n);
  const std::vector<double> vb = b.expand(n);
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(va[i] - vb[i]));
  return m;
}

}  // namespace qsep
