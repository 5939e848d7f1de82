#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qkt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Spin quantum number stored as the integer 2j, so half-integer spins
/// stay exact. dim = 2j+1.
struct SpinQuantum {
  int two_j = 0;

  explicit SpinQuantum(int two_j_);

  double j() const { return 0.5 * two_j; }
  int dim() const { return two_j + 1; }
};

/// Dense spin-j angular momentum matrices in the J_z eigenbasis,
/// ordered m = j, j-1, ..., -j (highest weight first).
struct AngularMomentumOps {
  SpinQuantum spin;
  Matrix jx, jy, jz;

  int dim() const { return spin.dim(); }
  double j() const { return spin.j(); }
};

AngularMomentumOps build_spin_ops(SpinQuantum spin);

/// Collective J_alpha = sum_i sigma_alpha^(i)/2 over n qubits, in the
/// computational basis (|0> = m_i = +1/2). Dimension 2^n.
struct CollectiveOps {
  int n_qubits = 1;
  Matrix jx, jy, jz;

  int dim() const { return 1 << n_qubits; }
  double j() const { return 0.5 * n_qubits; }
};

/// Multi-qubit dimension cap; QKT_MAX_QUBITS overrides the default of 12.
int qubit_cap();

CollectiveOps build_collective_ops(int n_qubits);

/// max |J^2 - j(j+1) I| over all entries.
double casimir_residual(const Matrix& jx, const Matrix& jy, const Matrix& jz,
                        double j);
double casimir_check(const AngularMomentumOps& ops);

/// max |[a, b] - i c| over all entries.
double commutator_residual(const Matrix& a, const Matrix& b, const Matrix& c);

/// max |m - m^dagger| over all entries.
double hermiticity_residual(const Matrix& m);

/// Isometry from the (n+1)-dimensional symmetric (Dicke) subspace into the
/// 2^n qubit space. Column c is the normalized sum of all basis states with
/// c excitations, i.e. the m = n/2 - c eigenvector, so the column order
/// matches the spin-j basis convention and embedding^dagger * J_coll *
/// embedding reproduces the spin-(n/2) matrices.
Matrix symmetric_subspace_embedding(int n_qubits);

}  // namespace qkt
