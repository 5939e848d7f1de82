#pragma once

#include "qkt/angmom.hpp"
#include "qkt/classical.hpp"

namespace qkt {

struct DensityMatrix {
  Matrix mat;

  int dim() const { return static_cast<int>(mat.rows()); }
};

/// Traceless part of a density matrix; the observable content of an
/// ensemble-averaged state.
struct DeviationMatrix {
  Matrix mat;

  int dim() const { return static_cast<int>(mat.rows()); }
};

/// exp(-i phi J_z) exp(-i theta J_y) |j, j>, the minimal-uncertainty state
/// centered on the classical point (theta, phi).
Vector coherent_state_spin_j(SpinQuantum spin, const SphericalCoord& c);

/// Product-state construction of the same rotation applied to |0>^n. Equals
/// the spin-(n/2) coherent state under the symmetric-subspace embedding.
Vector coherent_state_multiqubit(int n_qubits, const SphericalCoord& c);

/// (1 - epsilon) I/dim + epsilon |psi><psi|, epsilon in (0, 1].
DensityMatrix make_pseudo_pure(double epsilon, const Vector& psi);

DensityMatrix pure_state(const Vector& psi);

/// rho - (tr rho / dim) I.
DeviationMatrix deviation(const DensityMatrix& rho);

// Validation helpers (used by tests and integrity checks).
double trace_real(const Matrix& m);
double min_eigenvalue(const Matrix& hermitian);

}  // namespace qkt
