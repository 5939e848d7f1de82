#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "qkt/angmom.hpp"
#include "qkt/states.hpp"

namespace qkt {

struct QktParams {
  SpinQuantum spin{0};
  double k = 0.0;                            // chaoticity
  double kick_angle = std::numbers::pi / 2;  // rotation per kick about y
};

/// One-period unitary U = U_nl * U_kick with
///   U_kick = exp(-i kick_angle J_y)
///   U_nl   = exp(-i (k/2j) J_z^2)   (diagonal in the J_z eigenbasis)
struct FloquetOperator {
  QktParams params;
  Matrix u, u_kick, u_nl;

  int dim() const { return static_cast<int>(u.rows()); }
};

FloquetOperator build_floquet(const QktParams& params);

/// Same operator realized on 2j qubits with collective operators; the
/// torsion coefficient is k/(2j) = k/n.
FloquetOperator build_floquet_collective(const CollectiveOps& ops, double k,
                                         double kick_angle = std::numbers::pi /
                                                             2);

enum class DephasingModel { coherence_order, per_qubit };

struct DephasingSpec {
  DephasingModel model = DephasingModel::coherence_order;
  double strength = 0.0;  // lambda (coherence_order) or p (per_qubit)
};

/// Elementwise damping of off-diagonal density-matrix elements; the diagonal
/// is always left untouched. coherence_order multiplies element (m, m') by
/// exp(-lambda (m-m')^2); per_qubit applies rho -> (1-p) rho + p Z rho Z per
/// qubit, i.e. a factor (1-2p)^hamming(x^y) in the computational basis.
class DephasingChannel {
 public:
  static DephasingChannel coherence_order_spin(SpinQuantum spin,
                                               double lambda);
  static DephasingChannel coherence_order_multiqubit(int n_qubits,
                                                     double lambda);
  static DephasingChannel per_qubit(int n_qubits, double p);

  DensityMatrix apply(const DensityMatrix& rho) const;
  int dim() const { return static_cast<int>(factors_.rows()); }

 private:
  explicit DephasingChannel(Eigen::ArrayXXd factors);
  Eigen::ArrayXXd factors_;
};

DensityMatrix apply_dephasing(const DensityMatrix& rho,
                              const DephasingChannel& channel);

/// rho_{n+1} = D(U rho_n U^dagger); returns all n_kicks+1 states.
std::vector<DensityMatrix> evolve_schrodinger(
    const DensityMatrix& rho0, const FloquetOperator& f, int n_kicks,
    const DephasingChannel* noise = nullptr);

struct OperatorTriple {
  Matrix jx, jy, jz;
};

/// J_alpha(n+1) = U^dagger J_alpha(n) U; returns all n_kicks+1 triples.
std::vector<OperatorTriple> evolve_heisenberg(const AngularMomentumOps& ops,
                                              const FloquetOperator& f,
                                              int n_kicks);

/// exp(-i scale H) for Hermitian H, via eigendecomposition (unconditionally
/// unitary, no series truncation).
Matrix unitary_exp(const Matrix& hermitian, double scale);

}  // namespace qkt
