#pragma once

#include <string>
#include <vector>

namespace qsep {

// One numeric reproduction check: pass iff |computed - expected| <= tolerance
// (tolerance 0 demands bit equality; runtime rows use expected = 0 with the
// budget as tolerance).
struct CheckRow {
  std::string id;
  std::string label;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CriterionResult {
  int index = 0;
  std::string title;
  double seconds = 0.0;
  std::vector<CheckRow> rows;
  bool pass = false;
};

struct SuiteOptions {
  int verify_max_qubits = 8;
};

// The headline reproduction suite: threshold values, closed-form bounds,
// PPT comparisons, the oracle equivalence sweep and the property checks,
// each with its tolerance pinned in code.
std::vector<CriterionResult> run_reproduction_suite(const SuiteOptions& options = {});

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace qsep
