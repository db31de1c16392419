#include "qsep/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qsep/states.hpp"
#include "qsep/thresholds.hpp"
#include "qsep/verify.hpp"

namespace qsep {

namespace {

using Clock = std::chrono::steady_clock;

CheckRow make_row(std::string id, std::string label, double expected, double computed,
                  double tolerance) {
  const bool pass = std::isfinite(computed) && std::fabs(computed - expected) <= tolerance;
  return {std::move(id), std::move(label), expected, computed, tolerance, pass};
}

double solved_x(const ConditionalFamily& cond, double q, double tol = 1e-10) {
  const auto x = solve_x_threshold(cond, QParam(q), tol);
  if (!x) throw std::runtime_error("expected a threshold root for " + cond.label());
  return *x;
}

const FamilySpec kW2{Family::W, 2, 0, 0.0};
const FamilySpec kW3{Family::W, 3, 0, 0.0};
const FamilySpec kW4{Family::W, 4, 0, 0.0};
const FamilySpec kGhz3{Family::Ghz, 3, 0, 0.0};
const FamilySpec kGhz4{Family::Ghz, 4, 0, 0.0};
const FamilySpec kWerner{Family::Werner, 2, 0, 0.0};

std::vector<ConditionalFamily> grid_families() {
  return {
      {kW2}, {kW3}, {kW4}, {kGhz3}, {kGhz4}, {kWerner},
      {kW3, Conditional::RestGivenOne, MarginalMode::Exact},
      {kW3, Conditional::RestGivenOne, MarginalMode::AsPublished},
  };
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

HermitianMatrix random_hermitian(std::mt19937& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HermitianMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = u(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const cplx v{u(rng), u(rng)};
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

CriterionResult criterion_w2_q1() {
  CriterionResult r{1, "q = 1 threshold, two-qubit W family", 0.0, {}, false};
  const auto t0 = Clock::now();
  const double x = solved_x({kW2}, 1.0);
  const double solve_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.rows.push_back(make_row("w2_q1", "x*(q=1), W N=2", 0.6593, x, 1e-3));
  r.rows.push_back(make_row("w2_q1_runtime", "solve runtime (s), budget 0.1", 0.0, solve_seconds, 0.1));
  return r;
}

CriterionResult criterion_w2_qinf() {
  CriterionResult r{2, "q -> infinity threshold, two-qubit W family", 0.0, {}, false};
  r.rows.push_back(make_row("w2_q1000", "x*(q=1000), W N=2", 0.25, solved_x({kW2}, 1000.0), 5e-3));
  r.rows.push_back(make_row("w2_bound", "bound, W N=2 n=0 (exact)", 0.25, bound_w(2, 0), 0.0));
  return r;
}

CriterionResult criterion_w3() {
  CriterionResult r{3, "three-qubit W family thresholds", 0.0, {}, false};
  const auto grid = default_q_grid();
  const auto chain = threshold_curve({kW3}, grid);
  const auto published =
      threshold_curve({kW3, Conditional::RestGivenOne, MarginalMode::AsPublished}, grid);
  r.rows.push_back(make_row("w3_tail", "curve tail, one-given-rest", 0.2, chain.tail().value(), 2e-3));
  r.rows.push_back(make_row("w3_published_tail", "curve tail, rest-given-one as-published", 1.0 / 3.0,
                            published.tail().value(), 2e-3));
  r.rows.push_back(make_row("w3_bound_n0", "bound, W N=3 n=0 (exact)", 1.0 / 5.0, bound_w(3, 0), 0.0));
  r.rows.push_back(make_row("w3_bound_n1", "bound, W N=3 n=1 (exact)", 1.0 / 3.0, bound_w(3, 1), 0.0));
  return r;
}

CriterionResult criterion_ghz_bounds() {
  CriterionResult r{4, "GHZ family bounds", 0.0, {}, false};
  r.rows.push_back(make_row("ghz3_bound", "bound, GHZ N=3 (exact)", 1.0 / 7.0, bound_ghz(3), 0.0));
  r.rows.push_back(make_row("ghz4_bound", "bound, GHZ N=4 (exact)", 1.0 / 11.0, bound_ghz(4), 0.0));
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    worst = std::max(worst, std::fabs(asymptotic_ghz_threshold(n) - bound_ghz(n)));
  }
  r.rows.push_back(
      make_row("ghz_asymptotic", "max |numeric - closed form|, N = 2..10", 0.0, worst, 1e-10));
  return r;
}

CriterionResult criterion_ppt() {
  CriterionResult r{5, "PPT comparison", 0.0, {}, false};
  // Strongest bipartition each; the GHZ N=4 value 0.0625 needs the 2|2
  // split, the others already bind at a single qubit.
  const double ppt_w2 = ppt_threshold_strongest(kW2);
  const double ppt_w3 = ppt_threshold_strongest(kW3);
  const double ppt_ghz3 = ppt_threshold_strongest(kGhz3);
  const double ppt_ghz4 = ppt_threshold_strongest(kGhz4);
  r.rows.push_back(make_row("ppt_w2", "PPT threshold, W N=2", 0.25, ppt_w2, 1e-6));
  r.rows.push_back(make_row("ppt_w3", "PPT threshold, W N=3", 0.1547, ppt_w3, 5e-4));
  r.rows.push_back(make_row("ppt_ghz3", "PPT threshold, GHZ N=3", 1.0 / 7.0, ppt_ghz3, 1e-4));
  r.rows.push_back(make_row("ppt_ghz4", "PPT threshold, GHZ N=4", 0.0625, ppt_ghz4, 5e-4));
  r.rows.push_back(make_row("agree_w2", "entropic bound = PPT, W N=2", 0.0,
                            bound_w(2, 0) - ppt_w2, 1e-6));
  r.rows.push_back(make_row("agree_ghz3", "entropic bound = PPT, GHZ N=3", 0.0,
                            bound_ghz(3) - ppt_ghz3, 1e-4));
  r.rows.push_back(make_row("gap_w3", "entropic bound - PPT, W N=3", 0.2 - 0.1547,
                            bound_w(3, 0) - ppt_w3, 5e-4));
  r.rows.push_back(make_row("gap_ghz4", "entropic bound - PPT, GHZ N=4", 1.0 / 11.0 - 0.0625,
                            bound_ghz(4) - ppt_ghz4, 5e-4));
  return r;
}

CriterionResult criterion_werner() {
  CriterionResult r{6, "Werner validation family", 0.0, {}, false};
  r.rows.push_back(make_row("werner_q1", "x*(q=1), Werner", 0.747, solved_x({kWerner}, 1.0), 1e-3));
  r.rows.push_back(
      make_row("werner_q1000", "x*(q=1000), Werner", 1.0 / 3.0, solved_x({kWerner}, 1000.0), 5e-3));
  return r;
}

CriterionResult criterion_oracle(int max_qubits) {
  CriterionResult r{7, "oracle equivalence sweep", 0.0, {}, false};
  const OracleReport report = verify_closed_form_spectra(max_qubits);
  r.rows.push_back(make_row("oracle_error",
                            "max |closed - oracle| over " + std::to_string(report.cases) + " spectra",
                            0.0, report.max_abs_error, 1e-10));
  r.rows.push_back(make_row("oracle_runtime", "sweep runtime (s), budget 60", 0.0, report.seconds, 60.0));
  return r;
}

double pseudo_additivity_deviation() {
  std::mt19937 rng(20260808u);
  const double qs[] = {0.5, 1.0, 2.0, 4.0};
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Spectrum a = random_spectrum(rng);
    const Spectrum b = random_spectrum(rng);
    const Spectrum ab = tensor_product(a, b);
    for (double qv : qs) {
      const QParam q(qv);
      const double lhs = tsallis_entropy(ab, q);
      const double sa = tsallis_entropy(a, q);
      const double sb = tsallis_entropy(b, q);
      worst = std::max(worst, std::fabs(lhs - (sa + sb + (1.0 - qv) * sa * sb)));
    }
  }
  return worst;
}

int sign_equivalence_mismatches() {
  const auto q_grid = default_q_grid();
  int mismatches = 0;
  for (const auto& cond : grid_families()) {
    for (double qv : q_grid) {
      const QParam q(qv);
      for (int i = 0; i <= 20; ++i) {
        const double x = static_cast<double>(i) / 20;
        const SpectrumPair pair = cond.spectra_at(x);
        const double ar = ar_conditional_entropy(pair.joint, pair.marginal, q);
        const double rd = renyi_entropy(pair.joint, q) - renyi_entropy(pair.marginal, q);
        const double near_zero = 1e-12;
        if (std::fabs(ar) <= near_zero || std::fabs(rd) <= near_zero) continue;
        if ((ar > 0.0) != (rd > 0.0)) ++mismatches;
      }
    }
  }
  return mismatches;
}

double curve_monotonicity_violation() {
  const auto grid = default_q_grid();
  double worst = 0.0;
  for (const auto& cond : grid_families()) {
    const ThresholdCurve curve = threshold_curve(cond, grid);  // throws beyond 1e-9 slack
    const ThresholdSample* prev = nullptr;
    for (const auto& s : curve.samples) {
      if (!s.x_star) continue;
      if (prev) worst = std::max(worst, *s.x_star - *prev->x_star);
      prev = &s;
    }
  }
  return std::max(0.0, worst);
}

double involution_defect() {
  std::mt19937 rng(7u);
  double worst = 0.0;
  for (int n_qubits = 2; n_qubits <= 3; ++n_qubits) {
    const HermitianMatrix m = random_hermitian(rng, std::size_t{1} << n_qubits);
    std::vector<PartitionSpec> parts = {PartitionSpec::single(n_qubits, 0),
                                        PartitionSpec::last(n_qubits)};
    if (n_qubits == 3) parts.push_back({3, {0, 2}});
    for (const auto& part : parts) {
      worst = std::max(worst, max_entry_diff(partial_transpose(partial_transpose(m, part), part), m));
    }
  }
  return worst;
}

double marginal_permutation_defect() {
  double worst = 0.0;
  for (Family kind : {Family::W, Family::Ghz}) {
    for (int n = 3; n <= 6; ++n) {
      for (double x : {0.3, 0.7}) {
        const HermitianMatrix rho = family_density({kind, n, 0, x});
        HermitianMatrix reference;
        for (int keep = 0; keep < n; ++keep) {
          PartitionSpec traced{n, {}};
          for (int q = 0; q < n; ++q) {
            if (q != keep) traced.qubits.push_back(q);
          }
          const HermitianMatrix marginal = partial_trace(rho, traced);
          if (keep == 0) {
            reference = marginal;
          } else {
            worst = std::max(worst, max_entry_diff(reference, marginal));
          }
        }
      }
    }
  }
  return worst;
}

CriterionResult criterion_properties() {
  CriterionResult r{8, "property suites", 0.0, {}, false};
  r.rows.push_back(make_row("pseudo_additivity", "pseudo-additivity deviation, 100 random pairs", 0.0,
                            pseudo_additivity_deviation(), 1e-10));
  r.rows.push_back(make_row("sign_equivalence", "Tsallis/Renyi sign mismatches on the grid", 0.0,
                            static_cast<double>(sign_equivalence_mismatches()), 0.0));
  r.rows.push_back(make_row("curve_monotone", "max x*(q) increase along curves", 0.0,
                            curve_monotonicity_violation(), 1e-9));
  r.rows.push_back(make_row("pt_involution", "partial transpose involution defect (exact)", 0.0,
                            involution_defect(), 0.0));
  r.rows.push_back(make_row("marginal_permutation", "single-qubit marginal permutation defect", 0.0,
                            marginal_permutation_defect(), 1e-12));
  return r;
}

}  // namespace

std::vector<CriterionResult> run_reproduction_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> results;
  const auto run = [&](CriterionResult (*fn)()) {
    const auto t0 = Clock::now();
    CriterionResult r = fn();
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  };
  run(criterion_w2_q1);
  run(criterion_w2_qinf);
  run(criterion_w3);
  run(criterion_ghz_bounds);
  run(criterion_ppt);
  run(criterion_werner);
  {
    const auto t0 = Clock::now();
    CriterionResult r = criterion_oracle(options.verify_max_qubits);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  }
  run(criterion_properties);
  for (auto& r : results) {
    r.pass = true;
    for (const auto& row : r.rows) r.pass = r.pass && row.pass;
  }
  return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace qsep
