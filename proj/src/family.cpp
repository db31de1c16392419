#include "qsep/family.hpp"

namespace qsep {

std::string family_name(Family kind) {
  switch (kind) {
    case Family::W: return "w";
    case Family::Ghz: return "ghz";
    case Family::Werner: return "werner";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "w") return Family::W;
  if (name == "ghz") return Family::Ghz;
  if (name == "werner") return Family::Werner;
  throw std::invalid_argument("unknown family '" + name + "' (expected w, ghz or werner)");
}

void FamilySpec::validate() const {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("mixing parameter x must lie in [0, 1]");
  switch (kind) {
    case Family::W:
      if (n_qubits < 2) throw std::invalid_argument("W family needs at least 2 qubits");
      if (traced < 0 || traced > n_qubits - 2) {
        throw std::invalid_argument("W family allows 0 <= traced <= N-2");
      }
      break;
    case Family::Ghz:
      if (n_qubits < 2) throw std::invalid_argument("GHZ family needs at least 2 qubits");
      if (traced != 0 && traced != 1) throw std::invalid_argument("GHZ family allows traced in {0, 1}");
      break;
    case Family::Werner:
      if (n_qubits != 2) throw std::invalid_argument("Werner family is two-qubit only");
      if (traced != 0) throw std::invalid_argument("Werner family allows traced = 0 only");
      break;
  }
}

std::string FamilySpec::label() const {
  std::string s = family_name(kind) + " N=" + std::to_string(n_qubits);
  if (traced != 0) s += " n=" + std::to_string(traced);
  return s;
}

}  // namespace qsep
