#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkt/classical.hpp"
#include "qkt/evolution.hpp"
#include "qkt/observables.hpp"

namespace qkt {

enum class Representation { spin_j, multiqubit };

/// One deterministic prepare -> evolve -> observe pipeline.
struct RunConfig {
  Representation representation = Representation::spin_j;
  int two_j = 2;
  double k = 3.0;
  SphericalCoord initial = named_point_coord(NamedPoint::A);
  int n_kicks = 25;
  std::optional<DephasingSpec> noise;
  double epsilon = 1.0;
  double kick_angle = std::numbers::pi / 2;
  CorrelationMode corr_mode = CorrelationMode::state_overlap;
};

/// Per-kick diagnostics. Expectation values are deviation-normalized
/// (divided by epsilon), so they are independent of the pseudo-pure purity
/// factor; fid_* are trace fidelities against the A and A' coherent-state
/// deviations; corr_* are localization correlations against A, A', E, E'.
struct TrajectoryRecord {
  int kick = 0;
  double jx = 0.0, jy = 0.0, jz = 0.0;
  double fid_A = 0.0, fid_Ap = 0.0;
  double corr_A = 0.0, corr_Ap = 0.0, corr_E = 0.0, corr_Ep = 0.0;
  double purity = 0.0;
};

std::vector<TrajectoryRecord> simulate(const RunConfig& config);

std::vector<double> component_series(const std::vector<TrajectoryRecord>& traj,
                                     char component);  // 'x', 'y' or 'z'

/// Period estimate of the chosen expectation component (x or z).
PeriodEstimate tunneling_period(const std::vector<TrajectoryRecord>& traj,
                                char component = 'z');

enum class SweepAxis { two_j, k, noise_strength };
enum class SweepMode { trajectory, overlap };

struct SweepConfig {
  SweepAxis axis = SweepAxis::two_j;
  std::vector<double> values;  // sorted; two_j values must be integers
  RunConfig base;
  int parallelism = 1;
  SweepMode mode = SweepMode::trajectory;
  char component = 'z';  // series used for the period estimate
};

struct SweepPoint {
  double value = 0.0;
  std::vector<TrajectoryRecord> trajectory;
  PeriodEstimate period;
  double max_fid_Ap = 0.0;  // over kicks >= 1
  double overlap_AAp = 0.0; // overlap mode only
  bool failed = false;
  std::string error;
};

/// Executes sweep points concurrently (bounded by parallelism); results are
/// assembled in the order of config.values, so the outcome is independent of
/// scheduling.
std::vector<SweepPoint> run_sweep(const SweepConfig& config);

/// |trace fidelity| between the coherent-state deviations at A and A' for a
/// single spin size.
double coherent_overlap_AAp(int two_j);

}  // namespace qkt
