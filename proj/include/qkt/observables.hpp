#pragma once

#include <span>
#include <vector>

#include "qkt/angmom.hpp"
#include "qkt/states.hpp"

namespace qkt {

/// Expectation values of the angular momentum components divided by j,
/// so every component lies in [-1, 1].
struct ExpectationVector {
  double jx = 0.0, jy = 0.0, jz = 0.0;
};

/// tr(rho J_alpha)/j. Throws NumericalIntegrityError if the imaginary
/// residue of any trace exceeds 1e-10.
ExpectationVector expectations(const DensityMatrix& rho, const Matrix& jx,
                               const Matrix& jy, const Matrix& jz, double j);
ExpectationVector expectations(const DensityMatrix& rho,
                               const AngularMomentumOps& ops);
ExpectationVector expectations(const DensityMatrix& rho,
                               const CollectiveOps& ops);

/// Single-qubit reduced density matrix of qubit q (all others traced out).
Matrix reduced_qubit_density(const DensityMatrix& rho_multi, int qubit);

/// Collective expectations assembled from per-qubit reduced density
/// matrices: <J_alpha> = sum_i tr(rho_i sigma_alpha/2), normalized by
/// j = n/2. Equals expectations() on the full state.
ExpectationVector expectations_from_reduced(const DensityMatrix& rho_multi);

/// Normalized Hilbert-Schmidt inner product of two deviation matrices,
///   tr(a b) / sqrt(tr(a^2) tr(b^2))  in [-1, 1].
/// Negative values indicate overlap with opposite phases. Throws
/// std::domain_error if either argument is numerically zero.
double trace_fidelity(const DeviationMatrix& a, const DeviationMatrix& b);

enum class CorrelationMode { state_overlap, vector };

/// state_overlap: <ref| rho |ref> for the coherent reference state.
double correlation(const DensityMatrix& rho, const Vector& reference_state);

/// vector: squared cosine between two expectation 3-vectors. Throws
/// std::domain_error on a zero-length vector.
double correlation_vector(const ExpectationVector& a,
                          const ExpectationVector& b);

double purity(const DensityMatrix& rho);

enum class SpectrumWindow { none, hann };

struct Spectrum {
  std::vector<double> frequency;  // cycles per kick, [0, 0.5]
  std::vector<double> amplitude;  // DFT magnitude
  std::size_t peak_bin = 0;       // global max excluding the DC bin
  double peak_frequency = 0.0;
  double period_kicks = 0.0;  // 1 / peak_frequency
};

/// Mean-subtracted, optionally Hann-windowed, zero-padded discrete Fourier
/// transform magnitude. Series must have at least 8 samples.
Spectrum spectrum(std::span<const double> series, int pad_to = 256,
                  SpectrumWindow window = SpectrumWindow::none);

struct PeriodEstimate {
  double period_kicks = 0.0;
  double peak_frequency = 0.0;
  double tone_amplitude = 0.0;  // dominant line, in series units
  double dominance = 0.0;       // dominant line vs strongest other line
  bool aperiodic = false;
};

/// Period of the dominant oscillation with an aperiodicity classification.
/// The period comes from the unwindowed padded spectrum peak; the flag is
/// raised when the dominant tone is too weak (amplitude < 0.05 in the
/// j-normalized units used throughout) or not clearly dominant over the
/// next spectral line (ratio < 4), lines being measured on a Hann-windowed
/// spectrum so sidelobes of the main tone do not mask the second one.
PeriodEstimate estimate_period(std::span<const double> series,
                               int pad_to = 256);

}  // namespace qkt
