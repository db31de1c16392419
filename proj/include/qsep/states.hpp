#pragma once

#include <vector>

#include "qsep/family.hpp"
#include "qsep/hermit.hpp"

// Computational-basis constructors for Dicke/W/GHZ states, the symmetric
// projector and the full family density matrices. Together with `hermit`
// this is the brute-force oracle that the closed-form spectra are verified
// against; reduced family states are produced only by actual partial traces.
namespace qsep {

struct StateVector {
  int n_qubits = 0;
  std::vector<cplx> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

// Symmetric state with exactly k_down spins down: equal amplitude
// 1/sqrt(C(n, k_down)) on every basis string of that weight.
StateVector dicke_vector(int n_qubits, int k_down);

// (|up..up> + |down..down>)/sqrt(2)
StateVector ghz_vector(int n_qubits);

HermitianMatrix outer(const StateVector& v);

// Projector onto the (N+1)-dimensional permutation-symmetric subspace.
HermitianMatrix sym_projector(int n_qubits);

// Density matrix of the family state, reduced by spec.traced partial traces
// (last qubit each time; any choice agrees for these symmetric families).
HermitianMatrix family_density(const FamilySpec& spec);

double binomial(int n, int k);

}  // namespace qsep
