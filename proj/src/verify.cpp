#include "qsep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qsep/format.hpp"
#include "qsep/parallel.hpp"
#include "qsep/spectra.hpp"
#include "qsep/states.hpp"

namespace qsep {

namespace {

struct Task {
  Family kind;
  int n_qubits;
  double x;
};

struct TaskOutcome {
  int cases = 0;
  double max_abs_error = 0.0;
  std::vector<std::string> mismatches;
};

// Eigensolve the reduction chain of one family point and compare each stage
// against its closed form.
TaskOutcome run_task(const Task& task, double tol) {
  TaskOutcome out;
  auto compare = [&](const Spectrum& closed, const Spectrum& oracle, int traced) {
    const double err = max_spectrum_diff(closed, oracle);
    ++out.cases;
    out.max_abs_error = std::max(out.max_abs_error, err);
    if (err > tol) {
      out.mismatches.push_back(family_name(task.kind) + " N=" + std::to_string(task.n_qubits) +
                               " n=" + std::to_string(traced) + " x=" + format_g12(task.x) +
                               ": |closed - oracle| = " + format_g12(err));
    }
  };

  HermitianMatrix rho = family_density({task.kind, task.n_qubits, 0, task.x});
  const int max_traced = task.kind == Family::W ? task.n_qubits - 1 : 1;
  for (int traced = 0; traced <= max_traced; ++traced) {
    Spectrum closed;
    switch (task.kind) {
      case Family::W:
        closed = w_spectrum(task.n_qubits, traced, task.x);
        break;
      case Family::Ghz:
        closed = traced == 0 ? ghz_joint_spectrum(task.n_qubits, task.x)
                             : ghz_marginal_spectrum(task.n_qubits, task.x);
        break;
      case Family::Werner:
        closed = traced == 0 ? werner_spectrum(task.x) : maximally_mixed_qubit();
        break;
    }
    compare(closed, eigvalsh(rho), traced);
    if (traced < max_traced) {
      rho = partial_trace(rho, PartitionSpec::last(task.n_qubits - traced));
    }
  }
  return out;
}

}  // namespace

OracleReport verify_closed_form_spectra(int max_qubits, double x_step, double tol) {
  if (max_qubits < 2 || max_qubits > 12) {
    throw std::invalid_argument("verify_closed_form_spectra: 2 <= max_qubits <= 12");
  }
  if (!(x_step > 0.0 && x_step <= 1.0)) throw std::invalid_argument("x_step must lie in (0, 1]");

  const int steps = static_cast<int>(std::lround(1.0 / x_step));
  std::vector<Task> tasks;
  for (int n = 2; n <= max_qubits; ++n) {
    for (int i = 0; i <= steps; ++i) {
      const double x = static_cast<double>(i) / steps;
      tasks.push_back({Family::W, n, x});
      tasks.push_back({Family::Ghz, n, x});
      if (n == 2) tasks.push_back({Family::Werner, n, x});
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<TaskOutcome> outcomes(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) { outcomes[i] = run_task(tasks[i], tol); });

  OracleReport report;
  for (const auto& o : outcomes) {
    report.cases += o.cases;
    report.max_abs_error = std::max(report.max_abs_error, o.max_abs_error);
    report.mismatches.insert(report.mismatches.end(), o.mismatches.begin(), o.mismatches.end());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace qsep
