#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qkt/csvio.hpp"
#include "qkt/errors.hpp"
#include "qkt/trajectory.hpp"

using namespace qkt;

namespace {

double zero_lag_correlation(const std::vector<double>& a,
                            const std::vector<double>& b) {
  double ma = 0.0, mb = 0.0;
  for (double v : a) ma += v;
  for (double v : b) mb += v;
  ma /= a.size();
  mb /= b.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += (a[i] - ma) * (b[i] - mb);
  }
  return sum;
}

double swing(const std::vector<double>& s, std::size_t from) {
  double lo = s[from], hi = s[from];
  for (std::size_t i = from; i < s.size(); ++i) {
    lo = std::min(lo, s[i]);
    hi = std::max(hi, s[i]);
  }
  return hi - lo;
}

std::vector<double> corr_a_series(const std::vector<TrajectoryRecord>& traj) {
  std::vector<double> out;
  for (const auto& r : traj) out.push_back(r.corr_A);
  return out;
}

}  // namespace

TEST_SUITE("trajectory") {

TEST_CASE("record structure and bounds") {
  RunConfig cfg;
  cfg.two_j = 2;
  cfg.n_kicks = 25;
  const auto traj = simulate(cfg);
  REQUIRE(traj.size() == 26);
  for (int n = 0; n <= 25; ++n) {
    const TrajectoryRecord& r = traj[n];
    CHECK(r.kick == n);
    CHECK(std::abs(r.jx) <= 1.0 + 1e-9);
    CHECK(std::abs(r.jy) <= 1.0 + 1e-9);
    CHECK(std::abs(r.jz) <= 1.0 + 1e-9);
    CHECK(r.corr_A >= -1e-9);
    CHECK(r.corr_A <= 1.0 + 1e-9);
    CHECK(r.fid_A >= -1.0 - 1e-9);
    CHECK(r.fid_A <= 1.0 + 1e-9);
    CHECK(r.purity <= 1.0 + 1e-9);
  }
  CHECK(traj[0].fid_A == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(traj[0].corr_A == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("J_y stays flat while J_x and J_z tunnel") {
  for (int two_j : {2, 3}) {
    CAPTURE(two_j);
    RunConfig cfg;
    cfg.two_j = two_j;
    cfg.n_kicks = 25;
    const auto traj = simulate(cfg);
    double max_jy_drift = 0.0;
    double jx_lo = traj[0].jx, jx_hi = traj[0].jx;
    for (const auto& r : traj) {
      max_jy_drift = std::max(max_jy_drift, std::abs(r.jy - traj[0].jy));
      jx_lo = std::min(jx_lo, r.jx);
      jx_hi = std::max(jx_hi, r.jx);
    }
    CHECK(max_jy_drift < 0.1 * (jx_hi - jx_lo));
  }
}

TEST_CASE("fidelity revivals and out-of-phase tunneling correlations") {
  for (int two_j : {2, 3}) {
    CAPTURE(two_j);
    RunConfig cfg;
    cfg.two_j = two_j;
    cfg.n_kicks = 25;
    const auto traj = simulate(cfg);

    double max_fid_ap = -1.0;
    for (std::size_t n = 1; n < traj.size(); ++n) {
      max_fid_ap = std::max(max_fid_ap, traj[n].fid_Ap);
    }
    CHECK(max_fid_ap > (two_j == 2 ? 0.94 : 0.83));

    std::vector<double> ca, cap;
    for (const auto& r : traj) {
      ca.push_back(r.corr_A);
      cap.push_back(r.corr_Ap);
    }
    CHECK(zero_lag_correlation(ca, cap) < 0.0);
  }
}

TEST_CASE("reported expectations are purity-factor invariant") {
  RunConfig cfg;
  cfg.two_j = 2;
  cfg.n_kicks = 10;
  const auto pure = simulate(cfg);
  cfg.epsilon = 1e-3;
  const auto pp = simulate(cfg);
  for (std::size_t n = 0; n < pure.size(); ++n) {
    CHECK(std::abs((pure[n].jx) - (pp[n].jx)) < 1e-9);
    CHECK(std::abs((pure[n].jy) - (pp[n].jy)) < 1e-9);
    CHECK(std::abs((pure[n].jz) - (pp[n].jz)) < 1e-9);
    CHECK(std::abs((pure[n].fid_Ap) - (pp[n].fid_Ap)) < 1e-9);
  }
}

TEST_CASE("k=0 control run") {
  RunConfig cfg;
  cfg.two_j = 2;
  cfg.k = 0.0;
  cfg.n_kicks = 8;
  const auto traj = simulate(cfg);
  for (std::size_t n = 4; n < traj.size(); ++n) {
    CHECK(std::abs((traj[n].jx) - (traj[n - 4].jx)) < 1e-10);
    CHECK(std::abs((traj[n].jz) - (traj[n - 4].jz)) < 1e-10);
  }
  for (const auto& r : traj) {
    CHECK(std::abs((r.jy) - (traj[0].jy)) < 1e-10);
  }
}

TEST_CASE("vector correlation mode") {
  RunConfig cfg;
  cfg.two_j = 2;
  cfg.n_kicks = 5;
  cfg.corr_mode = CorrelationMode::vector;
  const auto traj = simulate(cfg);
  CHECK(traj[0].corr_A == doctest::Approx(1.0).epsilon(1e-10));
  for (const auto& r : traj) {
    CHECK(r.corr_A >= -1e-9);
    CHECK(r.corr_A <= 1.0 + 1e-9);
  }
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.two_j = 0;
  CHECK_THROWS_AS(simulate(cfg), UsageError);
  cfg.two_j = 2;
  cfg.n_kicks = 0;
  CHECK_THROWS_AS(simulate(cfg), UsageError);
  cfg.n_kicks = 5;
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(simulate(cfg), UsageError);
  cfg.epsilon = 1.0;
  cfg.noise = DephasingSpec{DephasingModel::per_qubit, 0.1};
  CHECK_THROWS_AS(simulate(cfg), UsageError);  // per_qubit needs multiqubit
  cfg.representation = Representation::multiqubit;
  CHECK_NOTHROW(simulate(cfg));
  cfg.two_j = 20;  // 20 qubits, over the cap
  CHECK_THROWS_AS(simulate(cfg), ResourceCapError);
}

TEST_CASE("noise damps the tunneling amplitude monotonically") {
  std::vector<double> amplitudes;
  for (double lambda : {0.0, 0.02, 0.2}) {
    RunConfig cfg;
    cfg.two_j = 2;
    cfg.n_kicks = 25;
    if (lambda > 0.0) {
      cfg.noise = DephasingSpec{DephasingModel::coherence_order, lambda};
    }
    const auto traj = simulate(cfg);
    amplitudes.push_back(swing(corr_a_series(traj), 10));
  }
  CHECK(amplitudes[0] > amplitudes[1]);
  CHECK(amplitudes[1] > amplitudes[2]);
}

TEST_CASE("sweep results are independent of parallelism") {
  SweepConfig cfg;
  cfg.axis = SweepAxis::two_j;
  cfg.values = {1, 2, 3, 4};
  cfg.base.n_kicks = 15;
  cfg.parallelism = 1;
  const auto serial = run_sweep(cfg);
  cfg.parallelism = 4;
  const auto parallel = run_sweep(cfg);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].value == parallel[i].value);
    CHECK(serial[i].period.period_kicks == parallel[i].period.period_kicks);
    CHECK(serial[i].max_fid_Ap == parallel[i].max_fid_Ap);
    REQUIRE(serial[i].trajectory.size() == parallel[i].trajectory.size());
    for (std::size_t n = 0; n < serial[i].trajectory.size(); ++n) {
      CHECK(serial[i].trajectory[n].jz == parallel[i].trajectory[n].jz);
    }
  }
}

TEST_CASE("sweep failures are recorded per point") {
  SweepConfig cfg;
  cfg.axis = SweepAxis::two_j;
  cfg.values = {2, 20};  // 20 qubits exceeds the multiqubit cap
  cfg.base.representation = Representation::multiqubit;
  cfg.base.n_kicks = 10;
  const auto points = run_sweep(cfg);
  REQUIRE(points.size() == 2);
  CHECK(!points[0].failed);
  CHECK(points[1].failed);
  CHECK(!points[1].error.empty());
}

TEST_CASE("overlap sweep reproduces the deviation-overlap scan") {
  SweepConfig cfg;
  cfg.mode = SweepMode::overlap;
  cfg.axis = SweepAxis::two_j;
  cfg.values = {1, 2, 10};
  const auto points = run_sweep(cfg);
  REQUIRE(points.size() == 3);
  CHECK(points[0].overlap_AAp == doctest::Approx(0.579743014314).epsilon(1e-9));
  CHECK(points[1].overlap_AAp == doctest::Approx(0.433769024743).epsilon(1e-9));
  CHECK(points[2].overlap_AAp < 0.1);
}

TEST_CASE("csv formatting is fixed width scientific") {
  CHECK(format_sig12(0.0) == "0.00000000000e+00");
  CHECK(format_sig12(1.0) == "1.00000000000e+00");
  CHECK(format_sig12(-0.433769024743382) == "-4.33769024743e-01");
  CHECK(format_sig12(12345.678) == "1.23456780000e+04");
}

TEST_CASE("trajectory csv round trip") {
  RunConfig cfg;
  cfg.two_j = 2;
  cfg.n_kicks = 12;
  const auto traj = simulate(cfg);
  const std::string body = trajectory_csv(traj);

  const auto tmp = std::filesystem::temp_directory_path() / "qkt_test_traj.csv";
  write_file(tmp, body);
  const CsvTable table = read_csv(tmp);
  REQUIRE(table.columns.size() == 11);
  CHECK(table.columns[0] == "kick");
  CHECK(table.columns[3] == "jz");
  REQUIRE(table.rows.size() == traj.size());

  const auto jz = table.column("jz");
  for (std::size_t n = 0; n < traj.size(); ++n) {
    CHECK(std::abs((jz[n]) - (traj[n].jz)) < 1e-11);
  }
  CHECK_THROWS_AS(table.column("no_such_column"), UsageError);

  // spectrum of the re-read series lands on the same peak
  const Spectrum from_file = spectrum(jz, 256);
  const Spectrum in_memory = spectrum(component_series(traj, 'z'), 256);
  CHECK(from_file.peak_bin == in_memory.peak_bin);
  CHECK(from_file.peak_frequency == in_memory.peak_frequency);
  std::filesystem::remove(tmp);
}

TEST_CASE("json output embeds config and all columns") {
  RunConfig cfg;
  cfg.two_j = 2;
  cfg.n_kicks = 3;
  cfg.noise = DephasingSpec{DephasingModel::coherence_order, 0.05};
  const auto traj = simulate(cfg);
  const std::string body = trajectory_json(cfg, traj);
  CHECK(body.find("\"two_j\": 2") != std::string::npos);
  CHECK(body.find("\"noise_model\": \"coherence_order\"") != std::string::npos);
  CHECK(body.find("\"fid_Ap\"") != std::string::npos);
  CHECK(body.find("\"purity\"") != std::string::npos);
}

}  // TEST_SUITE
