#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace qsep {

struct SpectrumEntry {
  double value = 0.0;
  int multiplicity = 0;
};

// Eigenvalue multiset of a density operator: (value, multiplicity) pairs in
// non-increasing value order. This is the sole input to the entropy layer.
class Spectrum {
 public:
  Spectrum() = default;

  // Closed-form constructor: merges entries whose values compare exactly
  // equal (degeneracies produced by the same arithmetic collapse reliably).
  static Spectrum from_entries(std::vector<SpectrumEntry> entries);

  // Numeric constructor: sorts descending and merges values within
  // merge_tol of the first member of each group.
  static Spectrum from_values(std::vector<double> values, double merge_tol = 1e-9);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int total_multiplicity() const;
  double weighted_sum() const;  // sum of value * multiplicity
  double max_value() const;     // largest value (first entry)

  // Values repeated by multiplicity, descending, zero-padded to pad_to.
  std::vector<double> expand(std::size_t pad_to = 0) const;

  // Copy with values within zero_tol of zero replaced by exact zero.
  // Degenerate entropy evaluation at q < 1 needs 0^q == 0, not eps^q.
  Spectrum clamped(double zero_tol = 1e-9) const;

  std::string to_csv() const;  // header "value,multiplicity", 12 significant digits
  nlohmann::json to_json() const;

 private:
  std::vector<SpectrumEntry> entries_;
};

// Spectrum of a tensor product: all pairwise value products.
Spectrum tensor_product(const Spectrum& a, const Spectrum& b);

// max_i |a_i - b_i| over the expanded lists, both padded to the longer one.
double max_spectrum_diff(const Spectrum& a, const Spectrum& b);

}  // namespace qsep
