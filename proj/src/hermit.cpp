#include "qsep/hermit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsep/kernels.hpp"

namespace qsep {

namespace {

constexpr std::size_t kMaxDim = std::size_t{1} << 12;

// Bit owned by qubit q inside an n-qubit basis index (qubit 0 = MSB).
inline std::size_t qubit_bit(int n_qubits, int q) {
  return std::size_t{1} << (n_qubits - 1 - q);
}

}  // namespace

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  HermitianMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

double HermitianMatrix::trace_real() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i].real();
  return t;
}

double HermitianMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      m = std::max(m, std::abs(a_[r * dim_ + c] - std::conj(a_[c * dim_ + r])));
    }
  }
  return m;
}

void HermitianMatrix::add_scaled(const HermitianMatrix& other, double w) {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch in add_scaled");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += w * other.a_[i];
}

void HermitianMatrix::scale(double w) {
  for (auto& v : a_) v *= w;
}

PartitionSpec PartitionSpec::single(int n_qubits, int qubit) { return {n_qubits, {qubit}}; }

PartitionSpec PartitionSpec::last(int n_qubits) { return {n_qubits, {n_qubits - 1}}; }

void PartitionSpec::validate(bool require_proper) const {
  if (n_qubits < 1) throw std::invalid_argument("partition needs at least one qubit");
  int prev = -1;
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits) throw std::invalid_argument("qubit index out of range");
    if (q <= prev) throw std::invalid_argument("partition qubits must be ascending and unique");
    prev = q;
  }
  if (require_proper) {
    if (qubits.empty()) throw std::invalid_argument("partition subset is empty");
    if (static_cast<int>(qubits.size()) == n_qubits) {
      throw std::invalid_argument("partition subset covers the full register");
    }
  }
}

HermitianMatrix partial_trace(const HermitianMatrix& rho, const PartitionSpec& part) {
  part.validate(/*require_proper=*/true);
  const std::size_t dim = std::size_t{1} << part.n_qubits;
  if (rho.dim() != dim) throw std::invalid_argument("partial_trace: dimension mismatch");

  std::vector<int> kept;
  kept.reserve(part.n_qubits - part.qubits.size());
  for (int q = 0; q < part.n_qubits; ++q) {
    if (!std::binary_search(part.qubits.begin(), part.qubits.end(), q)) kept.push_back(q);
  }
  const int n_out = static_cast<int>(kept.size());
  const std::size_t dim_out = std::size_t{1} << n_out;
  const std::size_t n_traced_states = std::size_t{1} << part.qubits.size();

  // Scatter the bits of a compact index onto the listed qubit positions.
  auto scatter = [&](std::size_t compact, const std::vector<int>& positions) {
    std::size_t out = 0;
    const int k = static_cast<int>(positions.size());
    for (int j = 0; j < k; ++j) {
      if ((compact >> (k - 1 - j)) & 1u) out |= qubit_bit(part.n_qubits, positions[j]);
    }
    return out;
  };

  std::vector<std::size_t> traced_patterns(n_traced_states);
  for (std::size_t t = 0; t < n_traced_states; ++t) traced_patterns[t] = scatter(t, part.qubits);

  HermitianMatrix out(dim_out);
  for (std::size_t r = 0; r < dim_out; ++r) {
    const std::size_t ri = scatter(r, kept);
    for (std::size_t c = 0; c < dim_out; ++c) {
      const std::size_t ci = scatter(c, kept);
      cplx acc = 0.0;
      for (std::size_t pat : traced_patterns) acc += rho(ri | pat, ci | pat);
      out(r, c) = acc;
    }
  }
  return out;
}

HermitianMatrix partial_transpose(const HermitianMatrix& rho, const PartitionSpec& part) {
  part.validate(/*require_proper=*/false);
  const std::size_t dim = std::size_t{1} << part.n_qubits;
  if (rho.dim() != dim) throw std::invalid_argument("partial_transpose: dimension mismatch");

  std::size_t mask = 0;
  for (int q : part.qubits) mask |= qubit_bit(part.n_qubits, q);

  HermitianMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t r = (i & ~mask) | (j & mask);
      const std::size_t c = (j & ~mask) | (i & mask);
      out(i, j) = rho(r, c);
    }
  }
  return out;
}

SymmetricEigensystem jacobi_eigh(std::vector<double> a, std::size_t n, bool with_vectors,
                                 double off_tol, int max_sweeps) {
  if (a.size() != n * n) throw std::invalid_argument("jacobi_eigh: bad buffer size");
  const auto& K = kernels::active();

  std::vector<double> vt;
  if (with_vectors) {
    vt.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;
  }

  auto max_off_diagonal = [&] {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      off = std::max(off, K.abs_max(&a[p * n + p + 1], n - p - 1));
    }
    return off;
  };

  int sweeps = 0;
  for (; sweeps < max_sweeps; ++sweeps) {
    if (max_off_diagonal() <= off_tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        const double mag = std::fabs(apq);
        if (mag <= off_tol) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Below relative machine precision of the diagonal a rotation is a
        // no-op; zero the pivot directly.
        const double guard = 100.0 * mag;
        if (std::fabs(app) + guard == std::fabs(app) && std::fabs(aqq) + guard == std::fabs(aqq)) {
          a[p * n + q] = 0.0;
          a[q * n + p] = 0.0;
          continue;
        }
        const double theta = 0.5 * (aqq - app) / apq;
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = ((theta >= 0.0) ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Two-sided rotation in the (p, q) plane: rows, then columns.
        K.rotate_pair(&a[p * n], &a[q * n], n, c, s);
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        if (with_vectors) K.rotate_pair(&vt[p * n], &vt[q * n], n, c, s);
      }
    }
  }
  if (max_off_diagonal() > off_tol) {
    throw std::runtime_error("jacobi_eigh: no convergence within " + std::to_string(max_sweeps) +
                             " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });

  SymmetricEigensystem sys;
  sys.dim = n;
  sys.sweeps = sweeps;
  sys.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) sys.eigenvalues[i] = a[order[i] * n + order[i]];
  if (with_vectors) {
    sys.eigenvectors.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      std::copy_n(&vt[order[i] * n], n, &sys.eigenvectors[i * n]);
    }
  }
  return sys;
}

std::vector<double> embed_real_symmetric(const HermitianMatrix& m) {
  const std::size_t d = m.dim();
  const std::size_t n = 2 * d;
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double re = m(i, j).real();
      const double im = m(i, j).imag();
      e[i * n + j] = re;
      e[(i + d) * n + (j + d)] = re;
      e[i * n + (j + d)] = -im;
      e[(i + d) * n + j] = im;
    }
  }
  return e;
}

Spectrum eigvalsh(const HermitianMatrix& m) {
  const std::size_t d = m.dim();
  if (d == 0 || d > kMaxDim) throw std::invalid_argument("eigvalsh: dimension out of range");
  if (m.hermiticity_defect() > 1e-9) {
    throw std::invalid_argument("eigvalsh: input is not Hermitian within 1e-9");
  }

  double max_im = 0.0;
  for (const auto& v : m.raw()) max_im = std::max(max_im, std::fabs(v.imag()));

  std::vector<double> values;
  if (max_im == 0.0) {
    // Real symmetric already; solve at dimension d. Symmetrize to remove
    // roundoff asymmetry below the Hermiticity tolerance.
    std::vector<double> a(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        a[i * d + j] = 0.5 * (m(i, j).real() + m(j, i).real());
      }
    }
    values = jacobi_eigh(std::move(a), d).eigenvalues;
  } else {
    // General Hermitian: the 2d x 2d embedding doubles every multiplicity,
    // so keep every other value of the sorted list.
    auto sys = jacobi_eigh(embed_real_symmetric(m), 2 * d);
    values.reserve(d);
    for (std::size_t i = 0; i < 2 * d; i += 2) values.push_back(sys.eigenvalues[i]);
  }
  return Spectrum::from_values(std::move(values), 1e-9);
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  HermitianMatrix out(da * db);
  for (std::size_t ia = 0; ia < da; ++ia) {
    for (std::size_t ja = 0; ja < da; ++ja) {
      const cplx w = a(ia, ja);
      if (w == cplx{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < db; ++ib) {
        for (std::size_t jb = 0; jb < db; ++jb) {
          out(ia * db + ib, ja * db + jb) = w * b(ib, jb);
        }
      }
    }
  }
  return out;
}

HermitianMatrix multiply(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
  const std::size_t n = a.dim();
  HermitianMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx w = a(i, k);
      if (w == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += w * b(k, j);
    }
  }
  return out;
}

double max_entry_diff(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_entry_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.raw().size(); ++i) m = std::max(m, std::abs(a.raw()[i] - b.raw()[i]));
  return m;
}

HermitianMatrix swap_qubits(const HermitianMatrix& rho, int n_qubits, int qa, int qb) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (rho.dim() != dim) throw std::invalid_argument("swap_qubits: dimension mismatch");
  const std::size_t ba = qubit_bit(n_qubits, qa);
  const std::size_t bb = qubit_bit(n_qubits, qb);
  auto perm = [&](std::size_t idx) {
    const bool va = idx & ba;
    const bool vb = idx & bb;
    if (va == vb) return idx;
    return idx ^ ba ^ bb;
  };
  HermitianMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = rho(perm(i), perm(j));
  }
  return out;
}

}  // namespace qsep
