#pragma once

#include <string>
#include <vector>

namespace qsep {

struct OracleReport {
  int cases = 0;
  double max_abs_error = 0.0;
  double seconds = 0.0;
  std::vector<std::string> mismatches;

  bool pass() const { return mismatches.empty(); }
};

// Cross-check every closed-form spectrum against the brute-force path
// (family construction, repeated partial traces, Jacobi eigensolve):
// W on N in {2..max_qubits} with 0..N-1 qubits traced, GHZ with 0 or 1
// traced, Werner plus its marginal, each on the x grid {0, x_step, ..., 1}.
// Eigenvalues are compared one by one after zero-padding; any difference
// beyond tol is recorded as a mismatch.
OracleReport verify_closed_form_spectra(int max_qubits, double x_step = 0.05, double tol = 1e-10);

}  // namespace qsep
