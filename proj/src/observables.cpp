#include "qkt/observables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qkt/errors.hpp"

namespace qkt {

namespace {

constexpr double kImagTolerance = 1e-10;

// tr(rho op) without forming the product matrix.
Complex trace_product(const Matrix& rho, const Matrix& op) {
  return (rho.array() * op.transpose().array()).sum();
}

double real_expectation(const Matrix& rho, const Matrix& op,
                        const char* label) {
  const Complex v = trace_product(rho, op);
  if (std::abs(v.imag()) > kImagTolerance) {
    throw NumericalIntegrityError(std::string("expectation of ") + label +
                                  " has imaginary residue " +
                                  std::to_string(v.imag()));
  }
  return v.real();
}

}  // namespace

ExpectationVector expectations(const DensityMatrix& rho, const Matrix& jx,
                               const Matrix& jy, const Matrix& jz, double j) {
  if (rho.mat.rows() != jx.rows()) {
    throw std::invalid_argument("expectations: dimension mismatch");
  }
  const double scale = j > 0.0 ? 1.0 / j : 1.0;
  return {real_expectation(rho.mat, jx, "J_x") * scale,
          real_expectation(rho.mat, jy, "J_y") * scale,
          real_expectation(rho.mat, jz, "J_z") * scale};
}

ExpectationVector expectations(const DensityMatrix& rho,
                               const AngularMomentumOps& ops) {
  return expectations(rho, ops.jx, ops.jy, ops.jz, ops.j());
}

ExpectationVector expectations(const DensityMatrix& rho,
                               const CollectiveOps& ops) {
  return expectations(rho, ops.jx, ops.jy, ops.jz, ops.j());
}

Matrix reduced_qubit_density(const DensityMatrix& rho_multi, int qubit) {
  const long d = rho_multi.mat.rows();
  if (d < 2 || (d & (d - 1)) != 0) {
    throw std::invalid_argument(
        "reduced_qubit_density: dimension is not a power of two");
  }
  const int n = std::countr_zero(static_cast<unsigned long>(d));
  if (qubit < 0 || qubit >= n) {
    throw std::invalid_argument("reduced_qubit_density: qubit out of range");
  }

  Matrix reduced = Matrix::Zero(2, 2);
  const long bit = 1L << qubit;
  for (long rest = 0; rest < d; ++rest) {
    if (rest & bit) continue;  // enumerate configurations with qubit cleared
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        reduced(a, b) += rho_multi.mat(rest | (a ? bit : 0),
                                       rest | (b ? bit : 0));
      }
    }
  }
  return reduced;
}

ExpectationVector expectations_from_reduced(const DensityMatrix& rho_multi) {
  const long d = rho_multi.mat.rows();
  const int n = std::countr_zero(static_cast<unsigned long>(d));

  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0.0, 0.5, 0.5, 0.0;
  sy << Complex(0, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(0, 0);
  sz << 0.5, 0.0, 0.0, -0.5;

  double jx = 0.0, jy = 0.0, jz = 0.0;
  for (int q = 0; q < n; ++q) {
    const Matrix r = reduced_qubit_density(rho_multi, q);
    jx += (r.array() * sx.transpose().array()).sum().real();
    jy += (r.array() * sy.transpose().array()).sum().real();
    jz += (r.array() * sz.transpose().array()).sum().real();
  }
  const double j = 0.5 * n;
  return {jx / j, jy / j, jz / j};
}

double trace_fidelity(const DeviationMatrix& a, const DeviationMatrix& b) {
  if (a.mat.rows() != b.mat.rows()) {
    throw std::invalid_argument("trace_fidelity: dimension mismatch");
  }
  const double na = a.mat.squaredNorm();  // tr(a^2) for Hermitian a
  const double nb = b.mat.squaredNorm();
  if (na < 1e-24 || nb < 1e-24) {
    throw std::domain_error(
        "trace_fidelity: zero deviation matrix (maximally mixed input?)");
  }
  const double inner = (a.mat.array() * b.mat.transpose().array()).sum().real();
  return inner / std::sqrt(na * nb);
}

double correlation(const DensityMatrix& rho, const Vector& reference_state) {
  if (rho.mat.rows() != reference_state.size()) {
    throw std::invalid_argument("correlation: dimension mismatch");
  }
  const Complex v = reference_state.adjoint() * rho.mat * reference_state;
  return v.real();
}

double correlation_vector(const ExpectationVector& a,
                          const ExpectationVector& b) {
  const double na = a.jx * a.jx + a.jy * a.jy + a.jz * a.jz;
  const double nb = b.jx * b.jx + b.jy * b.jy + b.jz * b.jz;
  if (na < 1e-24 || nb < 1e-24) {
    throw std::domain_error("correlation_vector: zero expectation vector");
  }
  const double dot = a.jx * b.jx + a.jy * b.jy + a.jz * b.jz;
  return dot * dot / (na * nb);
}

double purity(const DensityMatrix& rho) { return rho.mat.squaredNorm(); }

Spectrum spectrum(std::span<const double> series, int pad_to,
                  SpectrumWindow window) {
  const int n = static_cast<int>(series.size());
  if (n < 8) {
    throw UsageError("spectrum: need at least 8 samples, got " +
                     std::to_string(n));
  }
  const int p = std::max(pad_to, n);

  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= n;

  std::vector<double> x(n);
  for (int t = 0; t < n; ++t) {
    x[t] = series[t] - mean;
    if (window == SpectrumWindow::hann) {
      x[t] *= 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * t / (n - 1)));
    }
  }

  // Naive DFT of the zero-padded record; the series here are tens to a few
  // hundred samples, so O(n*p) is more than fast enough.
  Spectrum out;
  const int n_bins = p / 2 + 1;
  out.frequency.resize(n_bins);
  out.amplitude.resize(n_bins);
  for (int b = 0; b < n_bins; ++b) {
    Complex acc = 0.0;
    const double w = -2.0 * std::numbers::pi * b / p;
    for (int t = 0; t < n; ++t) {
      acc += x[t] * std::exp(Complex(0.0, w * t));
    }
    out.frequency[b] = static_cast<double>(b) / p;
    out.amplitude[b] = std::abs(acc);
  }

  out.peak_bin = 1;
  for (int b = 2; b < n_bins; ++b) {
    if (out.amplitude[b] > out.amplitude[out.peak_bin]) out.peak_bin = b;
  }
  out.peak_frequency = out.frequency[out.peak_bin];
  out.period_kicks = 1.0 / out.peak_frequency;
  return out;
}

PeriodEstimate estimate_period(std::span<const double> series, int pad_to) {
  const int n = static_cast<int>(series.size());
  const Spectrum plain = spectrum(series, pad_to, SpectrumWindow::none);
  const Spectrum windowed = spectrum(series, pad_to, SpectrumWindow::hann);

  // Hann coherent gain: sum of window samples / 2 maps line magnitude back
  // to the tone amplitude in series units.
  double gain = 0.0;
  for (int t = 0; t < n; ++t) {
    gain += 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * t / (n - 1)));
  }
  gain *= 0.5;

  const int p = std::max(pad_to, n);
  const std::size_t pk = windowed.peak_bin;
  const double amp = windowed.amplitude[pk] / gain;

  // Strongest line outside the Hann main lobe (half-width 2 bins pre-padding).
  const long halfwidth = (2L * p + n - 1) / n;
  double second = 0.0;
  for (std::size_t b = 1; b < windowed.amplitude.size(); ++b) {
    const long dist = std::labs(static_cast<long>(b) - static_cast<long>(pk));
    if (dist <= halfwidth) continue;
    second = std::max(second, windowed.amplitude[b] / gain);
  }

  PeriodEstimate est;
  est.period_kicks = plain.period_kicks;
  est.peak_frequency = plain.peak_frequency;
  est.tone_amplitude = amp;
  est.dominance = second > 0.0 ? amp / second
                               : std::numeric_limits<double>::infinity();
  est.aperiodic = amp < 0.05 || est.dominance < 4.0;
  return est;
}

}  // namespace qkt
