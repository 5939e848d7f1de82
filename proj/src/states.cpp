#include "qkt/states.hpp"

#include <cmath>
#include <stdexcept>

#include "qkt/errors.hpp"
#include "qkt/evolution.hpp"

namespace qkt {

Vector coherent_state_spin_j(SpinQuantum spin, const SphericalCoord& c) {
  const AngularMomentumOps ops = build_spin_ops(spin);
  const int d = spin.dim();

  // exp(-i theta J_y) applied to the highest-weight state |j, j>.
  const Matrix ry = unitary_exp(ops.jy, c.theta);
  Vector psi = ry.col(0);

  // exp(-i phi J_z) is diagonal.
  for (int i = 0; i < d; ++i) {
    const double m = spin.j() - i;
    psi(i) *= std::exp(Complex(0.0, -c.phi * m));
  }
  return psi;
}

Vector coherent_state_multiqubit(int n_qubits, const SphericalCoord& c) {
  if (n_qubits < 1) {
    throw std::invalid_argument("coherent_state_multiqubit: need n >= 1");
  }
  if (n_qubits > qubit_cap()) {
    throw ResourceCapError("coherent_state_multiqubit: " +
                           std::to_string(n_qubits) + " qubits exceeds cap " +
                           std::to_string(qubit_cap()));
  }

  // Single-qubit factor exp(-i phi I_z) exp(-i theta I_y) |0>.
  const Complex q0 =
      std::exp(Complex(0.0, -c.phi / 2)) * std::cos(c.theta / 2);
  const Complex q1 = std::exp(Complex(0.0, c.phi / 2)) * std::sin(c.theta / 2);

  const long d = 1L << n_qubits;
  Vector psi(d);
  for (long x = 0; x < d; ++x) {
    Complex amp = 1.0;
    for (int b = 0; b < n_qubits; ++b) {
      amp *= (x >> b) & 1 ? q1 : q0;
    }
    psi(x) = amp;
  }
  return psi;
}

DensityMatrix make_pseudo_pure(double epsilon, const Vector& psi) {
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw std::invalid_argument(
        "make_pseudo_pure: epsilon must lie in (0, 1]");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("make_pseudo_pure: psi must be unit norm");
  }
  const long d = psi.size();
  DensityMatrix rho;
  rho.mat = ((1.0 - epsilon) / d) * Matrix::Identity(d, d) +
            epsilon * (psi * psi.adjoint());
  return rho;
}

DensityMatrix pure_state(const Vector& psi) {
  return DensityMatrix{psi * psi.adjoint()};
}

DeviationMatrix deviation(const DensityMatrix& rho) {
  const long d = rho.mat.rows();
  const Complex tr = rho.mat.trace();
  return DeviationMatrix{rho.mat - (tr / static_cast<double>(d)) *
                                       Matrix::Identity(d, d)};
}

double trace_real(const Matrix& m) { return m.trace().real(); }

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian,
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace qkt
