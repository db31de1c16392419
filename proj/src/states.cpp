#include "qsep/states.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qsep {

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

StateVector dicke_vector(int n_qubits, int k_down) {
  if (n_qubits < 1 || n_qubits > 12) throw std::invalid_argument("dicke_vector: 1 <= N <= 12");
  if (k_down < 0 || k_down > n_qubits) throw std::invalid_argument("dicke_vector: k_down out of range");
  const std::size_t dim = std::size_t{1} << n_qubits;
  StateVector v{n_qubits, std::vector<cplx>(dim, 0.0)};
  const double amp = 1.0 / std::sqrt(binomial(n_qubits, k_down));
  for (std::size_t b = 0; b < dim; ++b) {
    if (std::popcount(b) == k_down) v.amplitudes[b] = amp;
  }
  return v;
}

StateVector ghz_vector(int n_qubits) {
  if (n_qubits < 2 || n_qubits > 12) throw std::invalid_argument("ghz_vector: 2 <= N <= 12");
  const std::size_t dim = std::size_t{1} << n_qubits;
  StateVector v{n_qubits, std::vector<cplx>(dim, 0.0)};
  const double amp = 1.0 / std::sqrt(2.0);
  v.amplitudes.front() = amp;
  v.amplitudes.back() = amp;
  return v;
}

HermitianMatrix outer(const StateVector& v) {
  const std::size_t dim = v.dim();
  HermitianMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (v.amplitudes[i] == cplx{0.0, 0.0}) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = v.amplitudes[i] * std::conj(v.amplitudes[j]);
    }
  }
  return m;
}

HermitianMatrix sym_projector(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 12) throw std::invalid_argument("sym_projector: 1 <= N <= 12");
  HermitianMatrix p(std::size_t{1} << n_qubits);
  for (int k = 0; k <= n_qubits; ++k) {
    p.add_scaled(outer(dicke_vector(n_qubits, k)), 1.0);
  }
  return p;
}

HermitianMatrix family_density(const FamilySpec& spec) {
  spec.validate();
  HermitianMatrix rho;
  switch (spec.kind) {
    case Family::W: {
      rho = sym_projector(spec.n_qubits);
      rho.scale((1.0 - spec.x) / (spec.n_qubits + 1));
      rho.add_scaled(outer(dicke_vector(spec.n_qubits, 1)), spec.x);
      break;
    }
    case Family::Ghz: {
      rho = sym_projector(spec.n_qubits);
      rho.scale((1.0 - spec.x) / (spec.n_qubits + 1));
      rho.add_scaled(outer(ghz_vector(spec.n_qubits)), spec.x);
      break;
    }
    case Family::Werner: {
      rho = HermitianMatrix::identity(4);
      rho.scale((1.0 - spec.x) / 4.0);
      rho.add_scaled(outer(ghz_vector(2)), spec.x);
      break;
    }
  }
  for (int n = spec.n_qubits; n > spec.kept_qubits(); --n) {
    rho = partial_trace(rho, PartitionSpec::last(n));
  }
  return rho;
}

}  // namespace qsep
