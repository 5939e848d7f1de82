#include "qkt/angmom.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qkt/errors.hpp"

namespace qkt {

SpinQuantum::SpinQuantum(int two_j_) : two_j(two_j_) {
  if (two_j_ < 0) {
    throw std::invalid_argument("SpinQuantum: 2j must be non-negative, got " +
                                std::to_string(two_j_));
  }
}

AngularMomentumOps build_spin_ops(SpinQuantum spin) {
  const int d = spin.dim();
  const double j = spin.j();

  // J+ in the m = j..-j basis: raising maps index i+1 -> i.
  Matrix jplus = Matrix::Zero(d, d);
  for (int i = 1; i < d; ++i) {
    const double m = j - i;
    jplus(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Matrix jminus = jplus.adjoint();

  AngularMomentumOps ops{spin, Matrix(), Matrix(), Matrix()};
  ops.jx = 0.5 * (jplus + jminus);
  ops.jy = Complex(0.0, -0.5) * (jplus - jminus);
  ops.jz = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    ops.jz(i, i) = j - i;
  }
  return ops;
}

int qubit_cap() {
  if (const char* env = std::getenv("QKT_MAX_QUBITS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return cap;
  }
  return 12;
}

CollectiveOps build_collective_ops(int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("build_collective_ops: need at least 1 qubit");
  }
  if (n_qubits > qubit_cap()) {
    throw ResourceCapError("build_collective_ops: " +
                           std::to_string(n_qubits) + " qubits exceeds cap " +
                           std::to_string(qubit_cap()) +
                           " (set QKT_MAX_QUBITS to raise)");
  }

  const long d = 1L << n_qubits;
  CollectiveOps ops{n_qubits, Matrix::Zero(d, d), Matrix::Zero(d, d),
                    Matrix::Zero(d, d)};

  // J_z is diagonal: m(x) = n/2 - popcount(x). J_x and J_y connect states
  // differing in exactly one bit, so fill the 2^n * n nonzeros directly.
  for (long x = 0; x < d; ++x) {
    ops.jz(x, x) = 0.5 * n_qubits - std::popcount(static_cast<unsigned long>(x));
    for (int b = 0; b < n_qubits; ++b) {
      const long y = x ^ (1L << b);
      ops.jx(x, y) += 0.5;
      // <x|sigma_y|y> per qubit: -i if bit b of x is 0, +i if it is 1.
      ops.jy(x, y) += (x >> b) & 1 ? Complex(0.0, 0.5) : Complex(0.0, -0.5);
    }
  }
  return ops;
}

double casimir_residual(const Matrix& jx, const Matrix& jy, const Matrix& jz,
                        double j) {
  const Matrix total = jx * jx + jy * jy + jz * jz;
  const Matrix expected =
      j * (j + 1) * Matrix::Identity(total.rows(), total.cols());
  return (total - expected).cwiseAbs().maxCoeff();
}

double casimir_check(const AngularMomentumOps& ops) {
  return casimir_residual(ops.jx, ops.jy, ops.jz, ops.j());
}

double commutator_residual(const Matrix& a, const Matrix& b, const Matrix& c) {
  return (a * b - b * a - Complex(0.0, 1.0) * c).cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r *= static_cast<double>(n - k + i) / i;
  }
  return r;
}

}  // namespace

Matrix symmetric_subspace_embedding(int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("symmetric_subspace_embedding: need n >= 1");
  }
  const long d = 1L << n_qubits;
  Matrix p = Matrix::Zero(d, n_qubits + 1);
  for (long x = 0; x < d; ++x) {
    const int w = std::popcount(static_cast<unsigned long>(x));
    p(x, w) = 1.0 / std::sqrt(binomial(n_qubits, w));
  }
  return p;
}

}  // namespace qkt
