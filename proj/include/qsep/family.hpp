#pragma once

#include <stdexcept>
#include <string>

namespace qsep {

// One-parameter symmetric mixed-state families:
//   W      : (1-x)/(N+1) * P_N + x |W_N><W_N|, optionally reduced by `traced` qubits
//   Ghz    : (1-x)/(N+1) * P_N + x |GHZ_N><GHZ_N|, traced in {0, 1}
//   Werner : two-qubit x |Phi><Phi| + (1-x) I/4 validation family
enum class Family { W, Ghz, Werner };

std::string family_name(Family kind);
Family family_from_name(const std::string& name);

struct FamilySpec {
  Family kind = Family::W;
  int n_qubits = 2;
  int traced = 0;
  double x = 0.0;

  int kept_qubits() const { return n_qubits - traced; }
  void validate() const;
  std::string label() const;  // e.g. "w N=3 n=1"
};

}  // namespace qsep
