#include "qsep/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsep/format.hpp"
#include "qsep/parallel.hpp"
#include "qsep/states.hpp"

namespace qsep {

namespace {

constexpr int kScanPoints = 101;

void check_tol(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
}

// Bisection on [lo, hi] with f(lo) > 0 >= f(hi); shrinks the bracket to tol
// and returns its midpoint.
double bisect_down(const std::function<double(double)>& f, double lo, double hi, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string conditional_name(Conditional split) {
  return split == Conditional::OneGivenRest ? "one-given-rest" : "rest-given-one";
}

}  // namespace

SpectrumPair ConditionalFamily::spectra_at(double x) const {
  FamilySpec at = family;
  at.x = x;
  return conditional_spectra(at, split, mode);
}

double ConditionalFamily::conditional_entropy(double x, QParam q) const {
  const SpectrumPair pair = spectra_at(x);
  return ar_conditional_entropy(pair.joint, pair.marginal, q);
}

std::string ConditionalFamily::label() const {
  std::string s = family.label();
  if (split == Conditional::RestGivenOne) s += " [" + conditional_name(split) + "]";
  if (mode == MarginalMode::AsPublished) s += " [as-published]";
  return s;
}

std::optional<double> solve_sign_change(const std::function<double(double)>& S, double tol,
                                        const std::string& label) {
  check_tol(tol);
  auto eval = [&](double x) {
    const double v = S(x);
    if (std::isnan(v)) throw std::runtime_error("NaN evaluation while solving " + label);
    return v;
  };

  // Uniform pre-scan: locate the sign change and insist it is unique.
  if (!(eval(0.0) > 0.0)) {
    throw std::runtime_error("function is not positive at x = 0 for " + label);
  }
  int crossings = 0;
  int bracket_hi = -1;
  bool positive = true;
  for (int i = 1; i < kScanPoints; ++i) {
    const double x = static_cast<double>(i) / (kScanPoints - 1);
    const bool cur_positive = eval(x) > 0.0;
    if (positive != cur_positive) {
      ++crossings;
      if (!cur_positive) bracket_hi = i;
      positive = cur_positive;
    }
  }
  if (crossings == 0) return std::nullopt;
  if (crossings > 1) {
    throw std::runtime_error("multiple sign changes on [0, 1] for " + label);
  }
  const double lo = static_cast<double>(bracket_hi - 1) / (kScanPoints - 1);
  const double hi = static_cast<double>(bracket_hi) / (kScanPoints - 1);
  return bisect_down(eval, lo, hi, tol);
}

std::optional<double> solve_x_threshold(const ConditionalFamily& cond, QParam q, double tol) {
  return solve_sign_change([&](double x) { return cond.conditional_entropy(x, q); }, tol,
                           cond.label() + " at q = " + format_g12(q.value()));
}

std::optional<double> solve_x_threshold(const FamilySpec& family, QParam q, double tol) {
  return solve_x_threshold(ConditionalFamily{family}, q, tol);
}

std::optional<double> ThresholdCurve::tail() const {
  for (auto it = samples.rbegin(); it != samples.rend(); ++it) {
    if (it->x_star) return it->x_star;
  }
  return std::nullopt;
}

std::string ThresholdCurve::to_csv() const {
  std::string out = "q,x_star\n";
  for (const auto& s : samples) {
    out += format_g12(s.q);
    out += ',';
    out += s.x_star ? format_g12(*s.x_star) : std::string("no-root");
    out += '\n';
  }
  return out;
}

nlohmann::json ThresholdCurve::to_json() const {
  nlohmann::json samples_json = nlohmann::json::array();
  for (const auto& s : samples) {
    nlohmann::json row{{"q", s.q}};
    if (s.x_star) {
      row["x_star"] = *s.x_star;
    } else {
      row["x_star"] = nullptr;
    }
    samples_json.push_back(std::move(row));
  }
  return nlohmann::json{
      {"family",
       {{"kind", family_name(cond.family.kind)},
        {"n_qubits", cond.family.n_qubits},
        {"traced", cond.family.traced}}},
      {"conditional", conditional_name(cond.split)},
      {"mode", marginal_mode_name(cond.mode)},
      {"tolerance", tolerance},
      {"samples", std::move(samples_json)},
  };
}

ThresholdCurve threshold_curve(const ConditionalFamily& cond, std::span<const double> q_grid,
                               double tol) {
  check_tol(tol);
  if (!std::is_sorted(q_grid.begin(), q_grid.end())) {
    throw std::invalid_argument("q grid must be sorted ascending");
  }
  ThresholdCurve curve{cond, tol, std::vector<ThresholdSample>(q_grid.size())};
  parallel_for(q_grid.size(), [&](std::size_t i) {
    curve.samples[i] = {q_grid[i], solve_x_threshold(cond, QParam(q_grid[i]), tol)};
  });

  const double slack = 1e-9;
  const ThresholdSample* prev = nullptr;
  for (const auto& s : curve.samples) {
    if (!s.x_star) continue;
    if (prev && *s.x_star > *prev->x_star + slack) {
      throw std::runtime_error("threshold curve not monotone for " + cond.label() + ": x*(" +
                               format_g12(prev->q) + ") = " + format_g12(*prev->x_star) + " < x*(" +
                               format_g12(s.q) + ") = " + format_g12(*s.x_star));
    }
    prev = &s;
  }
  return curve;
}

std::vector<double> default_q_grid() {
  const int points = 60;
  const double lo = std::log(0.2);
  const double hi = std::log(1000.0);
  std::vector<double> grid;
  grid.reserve(points + 1);
  for (int i = 0; i < points; ++i) {
    grid.push_back(std::exp(lo + (hi - lo) * i / (points - 1)));
  }
  grid.push_back(1.0);
  std::sort(grid.begin(), grid.end());
  return grid;
}

double bound_w(int n_qubits, int traced) {
  if (n_qubits < 2) throw std::invalid_argument("bound_w: N >= 2");
  if (traced < 0 || traced > n_qubits - 2) throw std::invalid_argument("bound_w: 0 <= n <= N-2");
  const int kept = n_qubits - traced;
  return static_cast<double>(n_qubits) / (kept * kept + 2 * n_qubits - traced);
}

double bound_ghz(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("bound_ghz: N >= 2");
  return 2.0 / (n_qubits * n_qubits + n_qubits + 2);
}

double asymptotic_threshold(const std::function<double(double)>& joint_max,
                            const std::function<double(double)>& marginal_max, double tol) {
  check_tol(tol);
  auto f = [&](double x) { return marginal_max(x) - joint_max(x); };
  if (!(f(0.0) > 0.0)) {
    throw std::invalid_argument("asymptotic_threshold requires joint_max(0) < marginal_max(0)");
  }
  if (f(1.0) > 0.0) {
    throw std::runtime_error("asymptotic_threshold: no sign change on [0, 1]");
  }
  return bisect_down(f, 0.0, 1.0, tol);
}

double asymptotic_w_threshold(int n_qubits, int traced, double tol) {
  if (n_qubits < 2) throw std::invalid_argument("asymptotic_w_threshold: N >= 2");
  if (traced < 0 || traced > n_qubits - 2) {
    throw std::invalid_argument("asymptotic_w_threshold: 0 <= n <= N-2");
  }
  const double N = n_qubits;
  const int kept = n_qubits - traced;
  // Level carrying the W weight in the joint and in the once-more-reduced
  // marginal; their crossing defines the q -> infinity bound.
  auto joint = [=](double x) { return (1.0 - x) / (kept + 1) + kept * x / N; };
  auto marginal = [=](double x) { return (1.0 - x) / kept + (kept - 1) * x / N; };
  return asymptotic_threshold(joint, marginal, tol);
}

double asymptotic_ghz_threshold(int n_qubits, double tol) {
  if (n_qubits < 2) throw std::invalid_argument("asymptotic_ghz_threshold: N >= 2");
  const double N = n_qubits;
  auto joint = [=](double x) { return (1.0 + N * x) / (N + 1); };
  auto marginal = [=](double x) { return (2.0 + x * (N - 2)) / (2.0 * N); };
  return asymptotic_threshold(joint, marginal, tol);
}

double ppt_min_eigenvalue(const FamilySpec& spec, const PartitionSpec& part) {
  spec.validate();
  if (spec.traced != 0) throw std::invalid_argument("ppt_min_eigenvalue acts on the full state");
  const HermitianMatrix transposed = partial_transpose(family_density(spec), part);
  const Spectrum s = eigvalsh(transposed);
  return s.entries().back().value;
}

double ppt_threshold(const FamilySpec& family, const PartitionSpec& part, double tol) {
  check_tol(tol);
  // The transposed symmetric families carry eigenvalues that are exactly
  // zero for every x (antisymmetric directions inside degenerate blocks),
  // so the raw minimum hovers at rounding noise on the positive side of the
  // boundary. Bisect against a numerical-zero floor instead of against 0.
  constexpr double kZeroFloor = 1e-12;
  auto shifted_min = [&](double x) {
    FamilySpec at = family;
    at.x = x;
    return ppt_min_eigenvalue(at, part) + kZeroFloor;
  };
  if (!(shifted_min(0.0) > 0.0)) {
    throw std::runtime_error("ppt_threshold: partial transpose not positive at x = 0");
  }
  if (shifted_min(1.0) > 0.0) {
    throw std::runtime_error("ppt_threshold: no sign change on [0, 1]");
  }
  return bisect_down(shifted_min, 0.0, 1.0, tol);
}

double ppt_threshold(const FamilySpec& family, double tol) {
  return ppt_threshold(family, PartitionSpec::last(family.n_qubits), tol);
}

double ppt_threshold_strongest(const FamilySpec& family, double tol) {
  double best = 1.0;
  for (int k = 1; 2 * k <= family.n_qubits; ++k) {
    PartitionSpec part{family.n_qubits, {}};
    for (int q = family.n_qubits - k; q < family.n_qubits; ++q) part.qubits.push_back(q);
    best = std::min(best, ppt_threshold(family, part, tol));
  }
  return best;
}

}  // namespace qsep
