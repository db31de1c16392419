// Acceptance suite: runs every reproduction criterion at its pinned
// tolerance and prints one pass/fail line per criterion. Exit status is
// nonzero if any criterion fails.

#include <cstdio>

#include "qsep/format.hpp"
#include "qsep/report.hpp"

int main() {
  const auto results = qsep::run_reproduction_suite({});
  for (const auto& r : results) {
    std::printf("[%d/%d] %s  %s (%.2f s)\n", r.index, static_cast<int>(results.size()),
                r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
    for (const auto& row : r.rows) {
      std::printf("    %-22s expected %-15s computed %-15s tol %-8s %s\n", row.id.c_str(),
                  qsep::format_g12(row.expected).c_str(), qsep::format_g12(row.computed).c_str(),
                  qsep::format_g12(row.tolerance).c_str(), row.pass ? "ok" : "FAIL");
    }
  }
  const bool ok = qsep::all_pass(results);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return ok ? 0 : 1;
}
