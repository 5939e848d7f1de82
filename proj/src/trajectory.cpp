#include "qkt/trajectory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qkt/errors.hpp"

namespace qkt {

namespace {

struct PreparedSystem {
  double j = 0.0;
  Matrix jx, jy, jz;
  FloquetOperator floquet;
  Vector psi0, psi_a, psi_ap, psi_e, psi_ep;
  std::optional<DephasingChannel> channel;
};

DephasingChannel make_channel(const RunConfig& cfg) {
  const DephasingSpec& spec = *cfg.noise;
  if (cfg.representation == Representation::spin_j) {
    if (spec.model == DephasingModel::per_qubit) {
      throw UsageError(
          "per_qubit dephasing requires the multiqubit representation");
    }
    return DephasingChannel::coherence_order_spin(SpinQuantum(cfg.two_j),
                                                  spec.strength);
  }
  const int n = cfg.two_j;
  if (spec.model == DephasingModel::per_qubit) {
    return DephasingChannel::per_qubit(n, spec.strength);
  }
  return DephasingChannel::coherence_order_multiqubit(n, spec.strength);
}

PreparedSystem prepare(const RunConfig& cfg) {
  PreparedSystem sys;
  const SphericalCoord a = named_point_coord(NamedPoint::A);
  const SphericalCoord ap = named_point_coord(NamedPoint::APrime);
  const SphericalCoord e = named_point_coord(NamedPoint::E);
  const SphericalCoord ep = named_point_coord(NamedPoint::EPrime);

  if (cfg.representation == Representation::spin_j) {
    const SpinQuantum spin(cfg.two_j);
    const AngularMomentumOps ops = build_spin_ops(spin);
    sys.j = spin.j();
    sys.jx = ops.jx;
    sys.jy = ops.jy;
    sys.jz = ops.jz;
    sys.floquet = build_floquet({spin, cfg.k, cfg.kick_angle});
    sys.psi0 = coherent_state_spin_j(spin, cfg.initial);
    sys.psi_a = coherent_state_spin_j(spin, a);
    sys.psi_ap = coherent_state_spin_j(spin, ap);
    sys.psi_e = coherent_state_spin_j(spin, e);
    sys.psi_ep = coherent_state_spin_j(spin, ep);
  } else {
    const int n = cfg.two_j;  // 2j qubits realize spin j
    const CollectiveOps ops = build_collective_ops(n);
    sys.j = ops.j();
    sys.jx = ops.jx;
    sys.jy = ops.jy;
    sys.jz = ops.jz;
    sys.floquet = build_floquet_collective(ops, cfg.k, cfg.kick_angle);
    sys.psi0 = coherent_state_multiqubit(n, cfg.initial);
    sys.psi_a = coherent_state_multiqubit(n, a);
    sys.psi_ap = coherent_state_multiqubit(n, ap);
    sys.psi_e = coherent_state_multiqubit(n, e);
    sys.psi_ep = coherent_state_multiqubit(n, ep);
  }
  if (cfg.noise && cfg.noise->strength > 0.0) {
    sys.channel = make_channel(cfg);
  }
  return sys;
}

}  // namespace

std::vector<TrajectoryRecord> simulate(const RunConfig& cfg) {
  if (cfg.two_j < 1) throw UsageError("simulate: two_j must be >= 1");
  if (cfg.n_kicks < 1) throw UsageError("simulate: n_kicks must be >= 1");
  if (!(cfg.epsilon > 0.0) || cfg.epsilon > 1.0) {
    throw UsageError("simulate: epsilon must lie in (0, 1]");
  }
  if (cfg.k < 0.0) throw UsageError("simulate: k must be >= 0");

  const PreparedSystem sys = prepare(cfg);

  // Pure noiseless runs evolve the statevector (O(d^2) per kick) instead of
  // conjugating the density matrix (O(d^3)); the records are identical.
  const bool pure_path = cfg.epsilon == 1.0 && !sys.channel;
  Vector psi = sys.psi0;
  DensityMatrix rho = pure_path ? pure_state(psi)
                                : make_pseudo_pure(cfg.epsilon, sys.psi0);

  const DeviationMatrix dev_a = deviation(pure_state(sys.psi_a));
  const DeviationMatrix dev_ap = deviation(pure_state(sys.psi_ap));
  const ExpectationVector exp_a = expectations(
      pure_state(sys.psi_a), sys.jx, sys.jy, sys.jz, sys.j);
  const ExpectationVector exp_ap = expectations(
      pure_state(sys.psi_ap), sys.jx, sys.jy, sys.jz, sys.j);
  const ExpectationVector exp_e = expectations(
      pure_state(sys.psi_e), sys.jx, sys.jy, sys.jz, sys.j);
  const ExpectationVector exp_ep = expectations(
      pure_state(sys.psi_ep), sys.jx, sys.jy, sys.jz, sys.j);

  std::vector<TrajectoryRecord> records;
  records.reserve(cfg.n_kicks + 1);

  for (int kick = 0; kick <= cfg.n_kicks; ++kick) {
    TrajectoryRecord rec;
    rec.kick = kick;

    const ExpectationVector ev =
        expectations(rho, sys.jx, sys.jy, sys.jz, sys.j);
    rec.jx = ev.jx / cfg.epsilon;
    rec.jy = ev.jy / cfg.epsilon;
    rec.jz = ev.jz / cfg.epsilon;

    const DeviationMatrix dev = deviation(rho);
    rec.fid_A = trace_fidelity(dev, dev_a);
    rec.fid_Ap = trace_fidelity(dev, dev_ap);

    if (cfg.corr_mode == CorrelationMode::state_overlap) {
      rec.corr_A = correlation(rho, sys.psi_a);
      rec.corr_Ap = correlation(rho, sys.psi_ap);
      rec.corr_E = correlation(rho, sys.psi_e);
      rec.corr_Ep = correlation(rho, sys.psi_ep);
    } else {
      const ExpectationVector norm_ev{rec.jx, rec.jy, rec.jz};
      rec.corr_A = correlation_vector(norm_ev, exp_a);
      rec.corr_Ap = correlation_vector(norm_ev, exp_ap);
      rec.corr_E = correlation_vector(norm_ev, exp_e);
      rec.corr_Ep = correlation_vector(norm_ev, exp_ep);
    }
    rec.purity = purity(rho);
    records.push_back(rec);

    if (kick < cfg.n_kicks) {
      if (pure_path) {
        psi = sys.floquet.u * psi;
        rho = pure_state(psi);
      } else {
        rho.mat = sys.floquet.u * rho.mat * sys.floquet.u.adjoint();
        if (sys.channel) rho = sys.channel->apply(rho);
      }
    }
  }
  return records;
}

std::vector<double> component_series(const std::vector<TrajectoryRecord>& traj,
                                     char component) {
  std::vector<double> out;
  out.reserve(traj.size());
  for (const TrajectoryRecord& r : traj) {
    switch (component) {
      case 'x':
        out.push_back(r.jx);
        break;
      case 'y':
        out.push_back(r.jy);
        break;
      case 'z':
        out.push_back(r.jz);
        break;
      default:
        throw UsageError("component must be one of x, y, z");
    }
  }
  return out;
}

PeriodEstimate tunneling_period(const std::vector<TrajectoryRecord>& traj,
                                char component) {
  if (component != 'x' && component != 'z') {
    throw UsageError("tunneling_period: component must be x or z");
  }
  return estimate_period(component_series(traj, component));
}

double coherent_overlap_AAp(int two_j) {
  const SpinQuantum spin(two_j);
  const Vector a =
      coherent_state_spin_j(spin, named_point_coord(NamedPoint::A));
  const Vector ap =
      coherent_state_spin_j(spin, named_point_coord(NamedPoint::APrime));
  return std::abs(
      trace_fidelity(deviation(pure_state(a)), deviation(pure_state(ap))));
}

std::vector<SweepPoint> run_sweep(const SweepConfig& cfg) {
  if (cfg.values.empty()) throw UsageError("sweep: no values given");
  if (cfg.parallelism < 1) throw UsageError("sweep: parallelism must be >= 1");

  std::vector<double> values = cfg.values;
  std::sort(values.begin(), values.end());

  std::vector<SweepPoint> points(values.size());

  auto run_point = [&](std::size_t i) {
    SweepPoint& pt = points[i];
    pt.value = values[i];
    try {
      if (cfg.mode == SweepMode::overlap) {
        const int two_j = static_cast<int>(std::lround(values[i]));
        if (std::abs(values[i] - two_j) > 1e-9 || two_j < 1) {
          throw UsageError("overlap sweep needs integer two_j values >= 1");
        }
        pt.overlap_AAp = coherent_overlap_AAp(two_j);
        return;
      }
      RunConfig run_cfg = cfg.base;
      switch (cfg.axis) {
        case SweepAxis::two_j: {
          const int two_j = static_cast<int>(std::lround(values[i]));
          if (std::abs(values[i] - two_j) > 1e-9 || two_j < 1) {
            throw UsageError("two_j sweep needs integer values >= 1");
          }
          run_cfg.two_j = two_j;
          break;
        }
        case SweepAxis::k:
          run_cfg.k = values[i];
          break;
        case SweepAxis::noise_strength: {
          DephasingSpec spec = run_cfg.noise.value_or(DephasingSpec{});
          spec.strength = values[i];
          run_cfg.noise = spec;
          break;
        }
      }
      pt.trajectory = simulate(run_cfg);
      pt.period = tunneling_period(pt.trajectory, cfg.component);
      pt.max_fid_Ap = pt.trajectory[1].fid_Ap;
      for (std::size_t n = 1; n < pt.trajectory.size(); ++n) {
        pt.max_fid_Ap = std::max(pt.max_fid_Ap, pt.trajectory[n].fid_Ap);
      }
    } catch (const std::exception& e) {
      pt.failed = true;
      pt.error = e.what();
    }
  };

  const int workers =
      std::min<std::size_t>(cfg.parallelism, values.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < values.size(); ++i) run_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < points.size();
             i = next.fetch_add(1)) {
          run_point(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }
  return points;
}

}  // namespace qkt
