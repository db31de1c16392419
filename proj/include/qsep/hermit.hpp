#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qsep/spectrum.hpp"

// Dense complex Hermitian linear algebra for small multiqubit operators
// (dimension up to 2^12): construction, partial trace, partial transpose and
// full eigen-decomposition. This is the brute-force side that every closed
// form in the library is checked against.
//
// Basis convention: a k-qubit operator is indexed by computational-basis
// integers b in [0, 2^k). Qubit 0 owns the MOST significant bit of b, and a
// set bit means spin down, so |up...up> is index 0 and |down...down> is
// index 2^k - 1. All bit arithmetic below (partial trace, partial transpose,
// swaps) is written against this convention.
namespace qsep {

using cplx = std::complex<double>;

class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static HermitianMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  const std::vector<cplx>& raw() const { return a_; }

  double trace_real() const;
  // max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const;
  // this += w * other
  void add_scaled(const HermitianMatrix& other, double w);
  void scale(double w);

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> a_;
};

// Bipartition of an n-qubit register: the listed qubits are the ones acted
// on (traced out / transposed). Indices ascending, no duplicates.
struct PartitionSpec {
  int n_qubits = 0;
  std::vector<int> qubits;

  static PartitionSpec single(int n_qubits, int qubit);
  static PartitionSpec last(int n_qubits);  // { n_qubits - 1 }

  // proper = neither empty nor the full register (required by partial trace)
  void validate(bool require_proper) const;
};

// Trace out part.qubits; result acts on the remaining qubits in their
// original order. Preserves trace and Hermiticity.
HermitianMatrix partial_trace(const HermitianMatrix& rho, const PartitionSpec& part);

// Transpose the part.qubits subsystem. Involutive: applying twice returns
// the input entrywise exactly (pure entry permutation plus conjugation).
HermitianMatrix partial_transpose(const HermitianMatrix& rho, const PartitionSpec& part);

// Eigenvalues of a Hermitian matrix, non-increasing, with near-degenerate
// values merged at tolerance 1e-9. Throws if the input is farther than 1e-9
// from Hermitian. Implemented by cyclic Jacobi rotations; complex input is
// solved through its 2d x 2d real-symmetric embedding.
Spectrum eigvalsh(const HermitianMatrix& m);

// --- real-symmetric engine -------------------------------------------------

struct SymmetricEigensystem {
  std::vector<double> eigenvalues;   // descending
  std::vector<double> eigenvectors;  // row i (length dim) pairs with eigenvalues[i]
  std::size_t dim = 0;
  int sweeps = 0;
};

// Cyclic Jacobi with threshold skipping. Converged when every off-diagonal
// magnitude is <= off_tol (default 1e-13); throws after max_sweeps (100)
// sweeps without convergence. The rotation row updates run through the
// dispatched SIMD kernels.
SymmetricEigensystem jacobi_eigh(std::vector<double> matrix, std::size_t dim,
                                 bool with_vectors = false, double off_tol = 1e-13,
                                 int max_sweeps = 100);

// [[Re(m), -Im(m)], [Im(m), Re(m)]]: real-symmetric 2d x 2d embedding whose
// spectrum is that of m with every multiplicity doubled.
std::vector<double> embed_real_symmetric(const HermitianMatrix& m);

// --- helpers used across modules and tests ---------------------------------

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix multiply(const HermitianMatrix& a, const HermitianMatrix& b);
double max_entry_diff(const HermitianMatrix& a, const HermitianMatrix& b);

// Conjugate rho by the permutation that swaps qubits qa and qb.
HermitianMatrix swap_qubits(const HermitianMatrix& rho, int n_qubits, int qa, int qb);

}  // namespace qsep
