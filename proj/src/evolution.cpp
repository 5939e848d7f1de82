#include "qkt/evolution.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qkt/errors.hpp"

namespace qkt {

Matrix unitary_exp(const Matrix& hermitian, double scale) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  const auto& evals = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Vector phases(evals.size());
  for (long i = 0; i < evals.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -scale * evals(i)));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

namespace {

// exp(-i (k/2j) J_z^2) on a diagonal J_z; exact elementwise exponential.
Matrix torsion_diagonal(const Matrix& jz, double j, double k) {
  const long d = jz.rows();
  Matrix u = Matrix::Zero(d, d);
  const double coeff = j > 0.0 ? k / (2.0 * j) : 0.0;
  for (long i = 0; i < d; ++i) {
    const double m = jz(i, i).real();
    u(i, i) = std::exp(Complex(0.0, -coeff * m * m));
  }
  return u;
}

}  // namespace

FloquetOperator build_floquet(const QktParams& params) {
  const AngularMomentumOps ops = build_spin_ops(params.spin);
  FloquetOperator f{params, Matrix(), Matrix(), Matrix()};
  f.u_kick = unitary_exp(ops.jy, params.kick_angle);
  f.u_nl = torsion_diagonal(ops.jz, params.spin.j(), params.k);
  f.u = f.u_nl * f.u_kick;
  return f;
}

FloquetOperator build_floquet_collective(const CollectiveOps& ops, double k,
                                         double kick_angle) {
  FloquetOperator f{QktParams{SpinQuantum(ops.n_qubits), k, kick_angle},
                    Matrix(), Matrix(), Matrix()};
  f.u_kick = unitary_exp(ops.jy, kick_angle);
  f.u_nl = torsion_diagonal(ops.jz, ops.j(), k);
  f.u = f.u_nl * f.u_kick;
  return f;
}

DephasingChannel::DephasingChannel(Eigen::ArrayXXd factors)
    : factors_(std::move(factors)) {}

DephasingChannel DephasingChannel::coherence_order_spin(SpinQuantum spin,
                                                        double lambda) {
  if (lambda < 0.0) {
    throw std::invalid_argument("coherence_order: lambda must be >= 0");
  }
  const int d = spin.dim();
  Eigen::ArrayXXd factors(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const double dm = static_cast<double>(a - b);  // m_a - m_b = b - a
      factors(a, b) = std::exp(-lambda * dm * dm);
    }
  }
  return DephasingChannel(std::move(factors));
}

DephasingChannel DephasingChannel::coherence_order_multiqubit(int n_qubits,
                                                              double lambda) {
  if (lambda < 0.0) {
    throw std::invalid_argument("coherence_order: lambda must be >= 0");
  }
  const long d = 1L << n_qubits;
  Eigen::ArrayXXd factors(d, d);
  for (long x = 0; x < d; ++x) {
    for (long y = 0; y < d; ++y) {
      const double dm = std::popcount(static_cast<unsigned long>(y)) -
                        static_cast<double>(
                            std::popcount(static_cast<unsigned long>(x)));
      factors(x, y) = std::exp(-lambda * dm * dm);
    }
  }
  return DephasingChannel(std::move(factors));
}

DephasingChannel DephasingChannel::per_qubit(int n_qubits, double p) {
  if (p < 0.0 || p > 0.5) {
    throw std::invalid_argument("per_qubit: p must lie in [0, 1/2]");
  }
  const long d = 1L << n_qubits;
  Eigen::ArrayXXd factors(d, d);
  for (long x = 0; x < d; ++x) {
    for (long y = 0; y < d; ++y) {
      const int h = std::popcount(static_cast<unsigned long>(x ^ y));
      factors(x, y) = std::pow(1.0 - 2.0 * p, h);
    }
  }
  return DephasingChannel(std::move(factors));
}

DensityMatrix DephasingChannel::apply(const DensityMatrix& rho) const {
  if (rho.mat.rows() != factors_.rows()) {
    throw std::invalid_argument("DephasingChannel: dimension mismatch");
  }
  return DensityMatrix{(rho.mat.array() * factors_).matrix()};
}

DensityMatrix apply_dephasing(const DensityMatrix& rho,
                              const DephasingChannel& channel) {
  return channel.apply(rho);
}

std::vector<DensityMatrix> evolve_schrodinger(const DensityMatrix& rho0,
                                              const FloquetOperator& f,
                                              int n_kicks,
                                              const DephasingChannel* noise) {
  if (rho0.mat.rows() != f.u.rows()) {
    throw std::invalid_argument(
        "evolve_schrodinger: state dim " + std::to_string(rho0.mat.rows()) +
        " does not match operator dim " + std::to_string(f.u.rows()));
  }
  if (n_kicks < 0) {
    throw std::invalid_argument("evolve_schrodinger: n_kicks must be >= 0");
  }
  std::vector<DensityMatrix> out;
  out.reserve(n_kicks + 1);
  out.push_back(rho0);
  for (int n = 0; n < n_kicks; ++n) {
    DensityMatrix next{f.u * out.back().mat * f.u.adjoint()};
    if (noise) next = noise->apply(next);
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<OperatorTriple> evolve_heisenberg(const AngularMomentumOps& ops,
                                              const FloquetOperator& f,
                                              int n_kicks) {
  if (ops.jx.rows() != f.u.rows()) {
    throw std::invalid_argument("evolve_heisenberg: dimension mismatch");
  }
  if (n_kicks < 0) {
    throw std::invalid_argument("evolve_heisenberg: n_kicks must be >= 0");
  }
  std::vector<OperatorTriple> out;
  out.reserve(n_kicks + 1);
  out.push_back({ops.jx, ops.jy, ops.jz});
  const Matrix udag = f.u.adjoint();
  for (int n = 0; n < n_kicks; ++n) {
    const OperatorTriple& prev = out.back();
    out.push_back({udag * prev.jx * f.u, udag * prev.jy * f.u,
                   udag * prev.jz * f.u});
  }
  return out;
}

}  // namespace qkt
