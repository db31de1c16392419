// qsep - separability thresholds for one-parameter symmetric W/GHZ/Werner
// qubit families from q-conditional entropies, with a brute-force oracle.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsep/format.hpp"
#include "qsep/kernels.hpp"
#include "qsep/report.hpp"
#include "qsep/states.hpp"
#include "qsep/thresholds.hpp"
#include "qsep/verify.hpp"

namespace {

using namespace qsep;

constexpr int kExitFlagError = 2;
constexpr int kExitVerifyFailure = 3;

enum class Format { Table, Csv, Json };

const std::map<std::string, Format> kFormatNames{
    {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
const std::map<std::string, Family> kFamilyNames{
    {"w", Family::W}, {"ghz", Family::Ghz}, {"werner", Family::Werner}};
const std::map<std::string, Conditional> kConditionalNames{
    {"single", Conditional::OneGivenRest}, {"group", Conditional::RestGivenOne}};
const std::map<std::string, MarginalMode> kModeNames{
    {"default", MarginalMode::Exact}, {"as-published", MarginalMode::AsPublished}};

void emit(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

nlohmann::json family_json(const FamilySpec& spec) {
  return {{"kind", family_name(spec.kind)}, {"n_qubits", spec.n_qubits}, {"traced", spec.traced}};
}

// Options shared by the family-based subcommands.
struct FamilyFlags {
  std::string family = "w";
  int n_qubits = 2;
  int traced = 0;
  double x = 0.0;
  double q = 1.0;
  double tol = 1e-10;
  std::string conditional = "single";
  std::string mode = "default";
  std::string format = "table";
  std::string output;

  FamilySpec spec() const { return {kFamilyNames.at(family), n_qubits, traced, x}; }
  ConditionalFamily cond() const {
    return {spec(), kConditionalNames.at(conditional), kModeNames.at(mode)};
  }
  Format fmt() const { return kFormatNames.at(format); }
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f, bool with_x, bool with_q) {
  cmd->add_option("--family", f.family, "State family")
      ->transform(CLI::IsMember({"w", "ghz", "werner"}))
      ->required();
  cmd->add_option("--n-qubits", f.n_qubits, "Number of qubits N")->check(CLI::Range(2, 12));
  cmd->add_option("--traced", f.traced, "Qubits traced out of the family state")
      ->check(CLI::Range(0, 11));
  if (with_x) cmd->add_option("--x", f.x, "Mixing parameter")->check(CLI::Range(0.0, 1.0));
  if (with_q) cmd->add_option("--q", f.q, "Entropic index q > 0");
  cmd->add_option("--format", f.format, "Output format")
      ->transform(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--output", f.output, "Write to file instead of stdout");
}

void add_conditional_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--conditional", f.conditional,
                  "single: S(A1|A2..Am); group: S(A1..Am-1|Am)")
      ->transform(CLI::IsMember({"single", "group"}));
  cmd->add_option("--mode", f.mode,
                  "group-conditional marginal: default (exact reduction) or as-published (I/2)")
      ->transform(CLI::IsMember({"default", "as-published"}));
}

// --- spectrum ---------------------------------------------------------------

int run_spectrum(const FamilyFlags& f, const std::string& via) {
  const FamilySpec spec = f.spec();
  const Spectrum s = via == "oracle" ? eigvalsh(family_density(spec)) : family_spectrum(spec);
  switch (f.fmt()) {
    case Format::Csv:
      emit(s.to_csv(), f.output);
      break;
    case Format::Json: {
      nlohmann::json j{{"family", family_json(spec)}, {"x", spec.x}, {"via", via},
                       {"spectrum", s.to_json()}};
      emit(j.dump(2) + "\n", f.output);
      break;
    }
    case Format::Table: {
      std::string out;
      for (const auto& e : s.entries()) {
        out += format_g12(e.value) + "  x" + std::to_string(e.multiplicity) + "\n";
      }
      emit(out, f.output);
      break;
    }
  }
  return 0;
}

// --- entropy ----------------------------------------------------------------

int run_entropy(const FamilyFlags& f) {
  const SpectrumPair pair = f.cond().spectra_at(f.x);
  const QParam q(f.q);
  const std::vector<std::pair<std::string, double>> rows = {
      {"tsallis_joint", tsallis_entropy(pair.joint, q)},
      {"tsallis_marginal", tsallis_entropy(pair.marginal, q)},
      {"renyi_joint", renyi_entropy(pair.joint, q)},
      {"renyi_marginal", renyi_entropy(pair.marginal, q)},
      {"von_neumann_joint", von_neumann_entropy(pair.joint)},
      {"von_neumann_marginal", von_neumann_entropy(pair.marginal)},
      {"power_sum_ratio", power_sum_ratio(pair.joint, pair.marginal, q)},
      {"ar_conditional", ar_conditional_entropy(pair.joint, pair.marginal, q)},
  };
  switch (f.fmt()) {
    case Format::Csv: {
      std::string out = "quantity,value\n";
      for (const auto& [name, value] : rows) out += name + "," + format_g12(value) + "\n";
      emit(out, f.output);
      break;
    }
    case Format::Json: {
      nlohmann::json j{{"family", family_json(f.spec())}, {"x", f.x}, {"q", f.q},
                       {"conditional", f.conditional}, {"mode", f.mode}};
      for (const auto& [name, value] : rows) j[name] = value;
      emit(j.dump(2) + "\n", f.output);
      break;
    }
    case Format::Table: {
      std::string out;
      for (const auto& [name, value] : rows) out += name + " = " + format_g12(value) + "\n";
      emit(out, f.output);
      break;
    }
  }
  return 0;
}

// --- threshold --------------------------------------------------------------

int run_threshold(const FamilyFlags& f) {
  const ConditionalFamily cond = f.cond();
  const std::optional<double> x_star = solve_x_threshold(cond, QParam(f.q), f.tol);
  const std::string value = x_star ? format_g12(*x_star) : std::string("no-root");
  switch (f.fmt()) {
    case Format::Csv:
      emit("q,x_star\n" + format_g12(f.q) + "," + value + "\n", f.output);
      break;
    case Format::Json: {
      nlohmann::json j{{"family", family_json(f.spec())}, {"conditional", f.conditional},
                       {"mode", f.mode}, {"q", f.q}, {"tolerance", f.tol}};
      if (x_star) {
        j["x_star"] = *x_star;
      } else {
        j["x_star"] = nullptr;
      }
      emit(j.dump(2) + "\n", f.output);
      break;
    }
    case Format::Table:
      emit(value + "\n", f.output);
      break;
  }
  return 0;
}

// --- curve ------------------------------------------------------------------

int run_curve(const FamilyFlags& f, double q_min, double q_max, int points, bool custom_grid) {
  std::vector<double> grid;
  if (custom_grid) {
    if (!(q_min > 0.0) || !(q_max > q_min) || points < 2) {
      throw std::invalid_argument("curve grid requires 0 < q-min < q-max and points >= 2");
    }
    for (int i = 0; i < points; ++i) {
      grid.push_back(std::exp(std::log(q_min) + (std::log(q_max) - std::log(q_min)) * i / (points - 1)));
    }
  } else {
    grid = default_q_grid();
  }
  const ThresholdCurve curve = threshold_curve(f.cond(), grid, f.tol);
  if (f.fmt() == Format::Json) {
    emit(curve.to_json().dump(2) + "\n", f.output);
  } else {
    emit(curve.to_csv(), f.output);  // csv and table coincide for curves
  }
  return 0;
}

// --- bound ------------------------------------------------------------------

int run_bound(const FamilyFlags& f) {
  const Family kind = kFamilyNames.at(f.family);
  double value = 0.0;
  switch (kind) {
    case Family::W:
      value = bound_w(f.n_qubits, f.traced);
      break;
    case Family::Ghz:
      value = bound_ghz(f.n_qubits);
      break;
    case Family::Werner:
      value = 1.0 / 3.0;  // Werner bound coincides with its PPT boundary
      break;
  }
  if (f.fmt() == Format::Json) {
    nlohmann::json j{{"family", family_json(f.spec())}, {"bound", value}};
    emit(j.dump(2) + "\n", f.output);
  } else {
    emit(format_g12(value) + "\n", f.output);
  }
  return 0;
}

// --- ppt --------------------------------------------------------------------

int run_ppt(const FamilyFlags& f, const std::vector<int>& qubits, bool have_x) {
  FamilySpec spec = f.spec();
  spec.traced = 0;
  PartitionSpec part{spec.n_qubits, qubits};
  if (part.qubits.empty()) part = PartitionSpec::last(spec.n_qubits);
  part.validate(/*require_proper=*/true);

  if (have_x) {
    const double min_eig = ppt_min_eigenvalue(spec, part);
    if (f.fmt() == Format::Json) {
      nlohmann::json j{{"family", family_json(spec)}, {"x", spec.x},
                       {"transposed_qubits", part.qubits}, {"min_eigenvalue", min_eig}};
      emit(j.dump(2) + "\n", f.output);
    } else {
      emit(format_g12(min_eig) + "\n", f.output);
    }
    return 0;
  }
  const double x_star = ppt_threshold(spec, part, f.tol);
  if (f.fmt() == Format::Json) {
    nlohmann::json j{{"family", family_json(spec)}, {"transposed_qubits", part.qubits},
                     {"tolerance", f.tol}, {"x_star", x_star}};
    emit(j.dump(2) + "\n", f.output);
  } else {
    emit(format_g12(x_star) + "\n", f.output);
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

int run_verify(int max_qubits, double x_step, double tol) {
  const OracleReport report = verify_closed_form_spectra(max_qubits, x_step, tol);
  std::printf("verified %d spectra against the brute-force oracle (N = 2..%d)\n", report.cases,
              max_qubits);
  std::printf("max |closed - oracle| = %s (tolerance %s), %.2f s, kernels: %s\n",
              format_g12(report.max_abs_error).c_str(), format_g12(tol).c_str(), report.seconds,
              kernels::active().name);
  if (!report.pass()) {
    for (const auto& m : report.mismatches) std::printf("MISMATCH %s\n", m.c_str());
    std::printf("FAIL\n");
    return kExitVerifyFailure;
  }
  std::printf("PASS\n");
  return 0;
}

// --- reproduce --------------------------------------------------------------

std::string figure_csv(const std::string& figure) {
  if (figure == "1") {
    // Conditional entropy of the two-qubit family against x for several q.
    std::string out = "q,x,s\n";
    const ConditionalFamily cond{{Family::W, 2, 0, 0.0}};
    for (double q : {0.4, 0.7, 1.0, 2.0, 5.0, 20.0}) {
      for (int i = 0; i <= 100; ++i) {
        const double x = static_cast<double>(i) / 100;
        out += format_g12(q) + "," + format_g12(x) + "," +
               format_g12(cond.conditional_entropy(x, QParam(q))) + "\n";
      }
    }
    return out;
  }
  ConditionalFamily cond;
  if (figure == "2") {
    cond = {{Family::W, 2, 0, 0.0}};
  } else if (figure == "3a") {
    cond = {{Family::W, 3, 0, 0.0}};
  } else if (figure == "3b") {
    cond = {{Family::W, 3, 0, 0.0}, Conditional::RestGivenOne, MarginalMode::AsPublished};
  } else {
    throw std::invalid_argument("unknown figure '" + figure + "' (expected 1, 2, 3a or 3b)");
  }
  return threshold_curve(cond, default_q_grid()).to_csv();
}

int run_reproduce(const std::string& figure, bool all, const std::string& output_dir) {
  const std::string dir = output_dir.empty() ? "." : output_dir;
  if (!figure.empty()) {
    const std::string path = dir + "/fig" + figure + ".csv";
    write_file(path, figure_csv(figure));
    std::printf("wrote %s\n", path.c_str());
  }
  if (!all) return 0;

  const auto results = run_reproduction_suite({});
  std::string csv = "criterion,id,label,expected,computed,tolerance,status\n";
  for (const auto& r : results) {
    std::printf("[%d/8] %s  %s (%.2f s)\n", r.index, r.pass ? "PASS" : "FAIL", r.title.c_str(),
                r.seconds);
    for (const auto& row : r.rows) {
      std::printf("    %-22s expected %-15s computed %-15s tol %-8s %s\n", row.id.c_str(),
                  format_g12(row.expected).c_str(), format_g12(row.computed).c_str(),
                  format_g12(row.tolerance).c_str(), row.pass ? "ok" : "FAIL");
      csv += std::to_string(r.index) + "," + row.id + ",\"" + row.label + "\"," +
             format_g12(row.expected) + "," + format_g12(row.computed) + "," +
             format_g12(row.tolerance) + "," + (row.pass ? "pass" : "fail") + "\n";
    }
  }
  const std::string path = dir + "/reproduce_report.csv";
  write_file(path, csv);
  std::printf("wrote %s\n", path.c_str());
  if (!all_pass(results)) {
    std::printf("FAIL\n");
    return kExitVerifyFailure;
  }
  std::printf("PASS\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separability of one-parameter symmetric W/GHZ/Werner qubit families via "
               "q-conditional entropies"};
  app.require_subcommand(1);

  FamilyFlags f;
  std::string via = "closed";
  double q_min = 0.2, q_max = 1000.0;
  int points = 60;
  std::vector<int> ppt_qubits;
  int verify_max_qubits = 8;
  double verify_x_step = 0.05;
  double verify_tol = 1e-10;
  std::string figure;
  bool reproduce_all = false;
  std::string output_dir = ".";

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalue spectrum of a family state");
  add_family_flags(spectrum_cmd, f, /*with_x=*/true, /*with_q=*/false);
  spectrum_cmd->add_option("--via", via, "closed form or brute-force oracle")
      ->transform(CLI::IsMember({"closed", "oracle"}));

  auto* entropy_cmd = app.add_subcommand("entropy", "Entropies of the conditional pair at (x, q)");
  add_family_flags(entropy_cmd, f, /*with_x=*/true, /*with_q=*/true);
  add_conditional_flags(entropy_cmd, f);

  auto* threshold_cmd = app.add_subcommand("threshold", "Solve the x*(q) separability boundary");
  add_family_flags(threshold_cmd, f, /*with_x=*/false, /*with_q=*/true);
  add_conditional_flags(threshold_cmd, f);
  threshold_cmd->add_option("--tol", f.tol, "Bisection bracket width");

  auto* curve_cmd = app.add_subcommand("curve", "Threshold curve x*(q) over a q grid");
  add_family_flags(curve_cmd, f, /*with_x=*/false, /*with_q=*/false);
  add_conditional_flags(curve_cmd, f);
  curve_cmd->add_option("--tol", f.tol, "Bisection bracket width");
  auto* qmin_opt = curve_cmd->add_option("--q-min", q_min, "Grid start (default grid if omitted)");
  auto* qmax_opt = curve_cmd->add_option("--q-max", q_max, "Grid end");
  auto* pts_opt = curve_cmd->add_option("--points", points, "Grid size");

  auto* bound_cmd = app.add_subcommand("bound", "Closed-form q->infinity separability bound");
  add_family_flags(bound_cmd, f, /*with_x=*/false, /*with_q=*/false);

  auto* ppt_cmd = app.add_subcommand("ppt", "Partial-transpose minimum eigenvalue or threshold");
  add_family_flags(ppt_cmd, f, /*with_x=*/true, /*with_q=*/false);
  ppt_cmd->add_option("--qubit", ppt_qubits, "Qubit(s) to transpose (default: last)");
  ppt_cmd->add_option("--tol", f.tol, "Bisection bracket width");

  auto* verify_cmd = app.add_subcommand("verify", "Closed forms vs brute-force oracle sweep");
  verify_cmd->add_option("--max-qubits", verify_max_qubits, "Sweep N = 2..max")->check(CLI::Range(2, 12));
  verify_cmd->add_option("--x-step", verify_x_step, "x grid step");
  verify_cmd->add_option("--tol", verify_tol, "Per-eigenvalue tolerance");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Reproduce figure data and headline numbers");
  reproduce_cmd->add_option("--figure", figure, "Figure data to write: 1, 2, 3a or 3b");
  reproduce_cmd->add_flag("--all", reproduce_all, "Run the full reproduction table");
  reproduce_cmd->add_option("--output-dir", output_dir, "Directory for emitted files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFlagError;
  }

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(f, via);
    if (entropy_cmd->parsed()) return run_entropy(f);
    if (threshold_cmd->parsed()) return run_threshold(f);
    if (curve_cmd->parsed()) {
      const bool custom = qmin_opt->count() || qmax_opt->count() || pts_opt->count();
      return run_curve(f, q_min, q_max, points, custom);
    }
    if (bound_cmd->parsed()) return run_bound(f);
    if (ppt_cmd->parsed()) return run_ppt(f, ppt_qubits, ppt_cmd->count("--x") > 0);
    if (verify_cmd->parsed()) return run_verify(verify_max_qubits, verify_x_step, verify_tol);
    if (reproduce_cmd->parsed()) {
      if (figure.empty() && !reproduce_all) {
        std::cerr << "reproduce: pass --figure or --all\n";
        return kExitFlagError;
      }
      return run_reproduce(figure, reproduce_all, output_dir);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlagError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return 0;
}
