#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsep/entropy.hpp"
#include "qsep/hermit.hpp"
#include "qsep/spectra.hpp"

// Separability boundaries: roots x*(q) of the q-conditional entropy in the
// mixing parameter, the q -> infinity closed-form bounds, and partial
// transpose (PPT) thresholds as the independent comparison. Everything is
// bisection on a bracketed sign change; robustness over speed.
namespace qsep {

// A family plus the conditional-entropy pairing to evaluate on it.
struct ConditionalFamily {
  FamilySpec family;  // family.x is ignored; x is the solve variable
  Conditional split = Conditional::OneGivenRest;
  MarginalMode mode = MarginalMode::Exact;

  SpectrumPair spectra_at(double x) const;
  double conditional_entropy(double x, QParam q) const;
  std::string label() const;
};

// Solver core: root of a continuous map S on [0, 1] with S(0) > 0. A scan at
// 101 uniform points must find exactly one sign change (none with S(1) > 0
// means no root -> nullopt; several mean the bracket assumption broke ->
// throws); bisection then shrinks the bracketing interval to width tol.
std::optional<double> solve_sign_change(const std::function<double(double)>& S, double tol,
                                        const std::string& label);

// Root of S_q(x) = 0 in the mixing parameter for one conditional family.
std::optional<double> solve_x_threshold(const ConditionalFamily& cond, QParam q, double tol = 1e-10);
std::optional<double> solve_x_threshold(const FamilySpec& family, QParam q, double tol = 1e-10);

struct ThresholdSample {
  double q = 0.0;
  std::optional<double> x_star;  // nullopt marks "no-root"
};

struct ThresholdCurve {
  ConditionalFamily cond;
  double tolerance = 0.0;
  std::vector<ThresholdSample> samples;  // ordered by q ascending

  // Last sample with a root (the q -> infinity end of the curve).
  std::optional<double> tail() const;

  std::string to_csv() const;  // header "q,x_star", 12 significant digits
  nlohmann::json to_json() const;
};

// One solve per grid point (grid ascending), computed in parallel and merged
// in q order. x*(q) must be non-increasing within 1e-9 slack; a violation
// throws with diagnostics since it signals a solver or formula bug.
ThresholdCurve threshold_curve(const ConditionalFamily& cond, std::span<const double> q_grid,
                               double tol = 1e-10);

// 60 log-spaced points in [0.2, 1e3] plus q = 1 exactly.
std::vector<double> default_q_grid();

// Closed-form q -> infinity separability bounds.
double bound_w(int n_qubits, int traced);  // N / ((N-n)^2 + 2N - n)
double bound_ghz(int n_qubits);            // 2 / (N^2 + N + 2)

// Root of joint_max(x) - marginal_max(x) on [0, 1]; this is the equation the
// closed-form bounds solve. Requires joint_max(0) < marginal_max(0) and a
// sign change on the interval.
double asymptotic_threshold(const std::function<double(double)>& joint_max,
                            const std::function<double(double)>& marginal_max, double tol = 1e-12);

// The bound equations instantiated with the family level pairs whose
// crossing defines them; agree with bound_w / bound_ghz to solver precision.
double asymptotic_w_threshold(int n_qubits, int traced, double tol = 1e-12);
double asymptotic_ghz_threshold(int n_qubits, double tol = 1e-12);

// Minimum eigenvalue of the partial transpose of the full family state.
double ppt_min_eigenvalue(const FamilySpec& spec, const PartitionSpec& part);

// Root in x of the minimum partial-transpose eigenvalue (the PPT boundary).
// family.x is ignored. Default partition: transpose the last qubit.
double ppt_threshold(const FamilySpec& family, const PartitionSpec& part, double tol = 1e-10);
double ppt_threshold(const FamilySpec& family, double tol = 1e-10);

// Most restrictive PPT boundary over the subset sizes 1 .. N/2. Permutation
// symmetry makes equal-sized subsets equivalent, so only the size matters;
// for the GHZ family with N >= 4 the half/half split binds, not the
// single-qubit one.
double ppt_threshold_strongest(const FamilySpec& family, double tol = 1e-10);

}  // namespace qsep
