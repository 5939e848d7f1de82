#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qkt/csvio.hpp"
#include "qkt/errors.hpp"
#include "qkt/evolution.hpp"
#include "qkt/observables.hpp"
#include "qkt/trajectory.hpp"

namespace py = pybind11;
using namespace qkt;

namespace {

CorrelationMode parse_corr_mode(const std::string& mode) {
  if (mode == "state_overlap") return CorrelationMode::state_overlap;
  if (mode == "vector") return CorrelationMode::vector;
  throw UsageError("corr mode must be state_overlap or vector");
}

SpectrumWindow parse_window(const std::string& window) {
  if (window == "none") return SpectrumWindow::none;
  if (window == "hann") return SpectrumWindow::hann;
  throw UsageError("window must be none or hann");
}

std::optional<DephasingSpec> parse_noise(const std::string& model,
                                         double strength) {
  if (model.empty() || strength == 0.0) return std::nullopt;
  DephasingSpec spec;
  if (model == "coherence_order") {
    spec.model = DephasingModel::coherence_order;
  } else if (model == "per_qubit") {
    spec.model = DephasingModel::per_qubit;
  } else {
    throw UsageError("noise model must be coherence_order or per_qubit");
  }
  spec.strength = strength;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantum kicked top simulator core";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<NumericalIntegrityError>(m, "NumericalIntegrityError",
                                                  PyExc_ArithmeticError);
  py::register_exception<ResourceCapError>(m, "ResourceCapError",
                                           PyExc_MemoryError);

  // angular momentum algebra
  py::class_<AngularMomentumOps>(m, "AngularMomentumOps")
      .def_property_readonly("two_j",
                             [](const AngularMomentumOps& o) {
                               return o.spin.two_j;
                             })
      .def_property_readonly("j", &AngularMomentumOps::j)
      .def_property_readonly("dim", &AngularMomentumOps::dim)
      .def_readonly("jx", &AngularMomentumOps::jx)
      .def_readonly("jy", &AngularMomentumOps::jy)
      .def_readonly("jz", &AngularMomentumOps::jz);

  py::class_<CollectiveOps>(m, "CollectiveOps")
      .def_readonly("n_qubits", &CollectiveOps::n_qubits)
      .def_property_readonly("j", &CollectiveOps::j)
      .def_property_readonly("dim", &CollectiveOps::dim)
      .def_readonly("jx", &CollectiveOps::jx)
      .def_readonly("jy", &CollectiveOps::jy)
      .def_readonly("jz", &CollectiveOps::jz);

  m.def("build_spin_ops",
        [](int two_j) { return build_spin_ops(SpinQuantum(two_j)); },
        py::arg("two_j"));
  m.def("build_collective_ops", &build_collective_ops, py::arg("n_qubits"));
  m.def("casimir_residual", &casimir_residual, py::arg("jx"), py::arg("jy"),
        py::arg("jz"), py::arg("j"));
  m.def("symmetric_subspace_embedding", &symmetric_subspace_embedding,
        py::arg("n_qubits"));
  m.def("qubit_cap", &qubit_cap);

  // classical map
  m.def("to_cartesian", [](double theta, double phi) {
    const ClassicalState s = to_cartesian({theta, phi});
    return py::make_tuple(s.x, s.y, s.z);
  });
  m.def("classical_step", [](double x, double y, double z, double k) {
    const ClassicalState s = classical_step({x, y, z}, k);
    return py::make_tuple(s.x, s.y, s.z);
  });
  m.def(
      "classical_trajectory",
      [](double theta, double phi, double k, int n_steps) {
        const auto traj = classical_trajectory({theta, phi}, k, n_steps);
        py::array_t<double> out({static_cast<py::ssize_t>(traj.size()),
                                 static_cast<py::ssize_t>(2)});
        auto r = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < traj.size(); ++i) {
          r(i, 0) = traj[i].theta;
          r(i, 1) = traj[i].phi;
        }
        return out;
      },
      py::arg("theta"), py::arg("phi"), py::arg("k"), py::arg("n_steps"));
  m.def(
      "generate_portrait",
      [](double k, int grid, int n_iter) {
        const PhasePortrait p = generate_portrait(k, grid, n_iter);
        py::array_t<double> out({static_cast<py::ssize_t>(p.points.size()),
                                 static_cast<py::ssize_t>(4)});
        auto r = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < p.points.size(); ++i) {
          r(i, 0) = p.points[i].traj_id;
          r(i, 1) = p.points[i].iter;
          r(i, 2) = p.points[i].theta;
          r(i, 3) = p.points[i].phi;
        }
        return out;
      },
      py::arg("k"), py::arg("grid"), py::arg("n_iter"));
  m.def("named_point", [](const std::string& label) {
    const auto p = parse_named_point(label);
    if (!p) throw UsageError("unknown named point: " + label);
    const SphericalCoord c = named_point_coord(*p);
    return py::make_tuple(c.theta, c.phi);
  });

  // states
  m.def(
      "coherent_state_spin_j",
      [](int two_j, double theta, double phi) {
        return Vector(
            coherent_state_spin_j(SpinQuantum(two_j), {theta, phi}));
      },
      py::arg("two_j"), py::arg("theta"), py::arg("phi"));
  m.def(
      "coherent_state_multiqubit",
      [](int n_qubits, double theta, double phi) {
        return Vector(coherent_state_multiqubit(n_qubits, {theta, phi}));
      },
      py::arg("n_qubits"), py::arg("theta"), py::arg("phi"));
  m.def(
      "make_pseudo_pure",
      [](double epsilon, const Vector& psi) {
        return Matrix(make_pseudo_pure(epsilon, psi).mat);
      },
      py::arg("epsilon"), py::arg("psi"));
  m.def("deviation",
        [](const Matrix& rho) { return Matrix(deviation({rho}).mat); },
        py::arg("rho"));

  // evolution
  py::class_<FloquetOperator>(m, "FloquetOperator")
      .def_property_readonly("two_j",
                             [](const FloquetOperator& f) {
                               return f.params.spin.two_j;
                             })
      .def_property_readonly("k",
                             [](const FloquetOperator& f) { return f.params.k; })
      .def_property_readonly("dim", &FloquetOperator::dim)
      .def_readonly("u", &FloquetOperator::u)
      .def_readonly("u_kick", &FloquetOperator::u_kick)
      .def_readonly("u_nl", &FloquetOperator::u_nl);

  m.def(
      "build_floquet",
      [](int two_j, double k, double kick_angle) {
        return build_floquet({SpinQuantum(two_j), k, kick_angle});
      },
      py::arg("two_j"), py::arg("k"),
      py::arg("kick_angle") = std::numbers::pi / 2);
  m.def(
      "build_floquet_collective",
      [](int n_qubits, double k, double kick_angle) {
        return build_floquet_collective(build_collective_ops(n_qubits), k,
                                        kick_angle);
      },
      py::arg("n_qubits"), py::arg("k"),
      py::arg("kick_angle") = std::numbers::pi / 2);
  m.def(
      "evolve_schrodinger",
      [](const Matrix& rho0, const FloquetOperator& f, int n_kicks,
         const std::string& noise_model, double noise_strength) {
        const auto spec = parse_noise(noise_model, noise_strength);
        std::optional<DephasingChannel> channel;
        if (spec) {
          if (spec->model == DephasingModel::per_qubit) {
            const int n = f.params.spin.two_j;
            channel = DephasingChannel::per_qubit(n, spec->strength);
          } else if ((1 << f.params.spin.two_j) == f.dim()) {
            channel = DephasingChannel::coherence_order_multiqubit(
                f.params.spin.two_j, spec->strength);
          } else {
            channel = DephasingChannel::coherence_order_spin(
                f.params.spin, spec->strength);
          }
        }
        const auto states = evolve_schrodinger(
            {rho0}, f, n_kicks, channel ? &*channel : nullptr);
        std::vector<Matrix> out;
        out.reserve(states.size());
        for (const auto& s : states) out.push_back(s.mat);
        return out;
      },
      py::arg("rho0"), py::arg("floquet"), py::arg("n_kicks"),
      py::arg("noise_model") = "", py::arg("noise_strength") = 0.0);

  // observables
  m.def(
      "expectations",
      [](const Matrix& rho, const Matrix& jx, const Matrix& jy,
         const Matrix& jz, double j) {
        const ExpectationVector ev = expectations({rho}, jx, jy, jz, j);
        return py::make_tuple(ev.jx, ev.jy, ev.jz);
      },
      py::arg("rho"), py::arg("jx"), py::arg("jy"), py::arg("jz"),
      py::arg("j"));
  m.def(
      "expectations_from_reduced",
      [](const Matrix& rho) {
        const ExpectationVector ev = expectations_from_reduced({rho});
        return py::make_tuple(ev.jx, ev.jy, ev.jz);
      },
      py::arg("rho"));
  m.def(
      "trace_fidelity",
      [](const Matrix& a, const Matrix& b) {
        return trace_fidelity(DeviationMatrix{a}, DeviationMatrix{b});
      },
      py::arg("dev_a"), py::arg("dev_b"));
  m.def(
      "correlation",
      [](const Matrix& rho, const Vector& reference) {
        return correlation({rho}, reference);
      },
      py::arg("rho"), py::arg("reference_state"));

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("frequency", &Spectrum::frequency)
      .def_readonly("amplitude", &Spectrum::amplitude)
      .def_readonly("peak_frequency", &Spectrum::peak_frequency)
      .def_readonly("period_kicks", &Spectrum::period_kicks);

  m.def(
      "spectrum",
      [](const std::vector<double>& series, int pad_to,
         const std::string& window) {
        return spectrum(series, pad_to, parse_window(window));
      },
      py::arg("series"), py::arg("pad_to") = 256, py::arg("window") = "none");

  py::class_<PeriodEstimate>(m, "PeriodEstimate")
      .def_readonly("period_kicks", &PeriodEstimate::period_kicks)
      .def_readonly("peak_frequency", &PeriodEstimate::peak_frequency)
      .def_readonly("tone_amplitude", &PeriodEstimate::tone_amplitude)
      .def_readonly("dominance", &PeriodEstimate::dominance)
      .def_readonly("aperiodic", &PeriodEstimate::aperiodic);

  m.def(
      "estimate_period",
      [](const std::vector<double>& series, int pad_to) {
        return estimate_period(series, pad_to);
      },
      py::arg("series"), py::arg("pad_to") = 256);

  // full pipeline
  py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
      .def_readonly("kick", &TrajectoryRecord::kick)
      .def_readonly("jx", &TrajectoryRecord::jx)
      .def_readonly("jy", &TrajectoryRecord::jy)
      .def_readonly("jz", &TrajectoryRecord::jz)
      .def_readonly("fid_A", &TrajectoryRecord::fid_A)
      .def_readonly("fid_Ap", &TrajectoryRecord::fid_Ap)
      .def_readonly("corr_A", &TrajectoryRecord::corr_A)
      .def_readonly("corr_Ap", &TrajectoryRecord::corr_Ap)
      .def_readonly("corr_E", &TrajectoryRecord::corr_E)
      .def_readonly("corr_Ep", &TrajectoryRecord::corr_Ep)
      .def_readonly("purity", &TrajectoryRecord::purity)
      .def("__repr__", [](const TrajectoryRecord& r) {
        return "TrajectoryRecord(kick=" + std::to_string(r.kick) +
               ", jz=" + std::to_string(r.jz) + ")";
      });

  m.def(
      "simulate",
      [](int two_j, double k, double theta, double phi, int n_kicks,
         const std::string& representation, const std::string& noise_model,
         double noise_strength, double epsilon, const std::string& corr_mode) {
        RunConfig cfg;
        cfg.two_j = two_j;
        cfg.k = k;
        cfg.initial = {theta, phi};
        cfg.n_kicks = n_kicks;
        if (representation == "spin_j") {
          cfg.representation = Representation::spin_j;
        } else if (representation == "multiqubit") {
          cfg.representation = Representation::multiqubit;
        } else {
          throw UsageError("representation must be spin_j or multiqubit");
        }
        cfg.noise = parse_noise(noise_model, noise_strength);
        cfg.epsilon = epsilon;
        cfg.corr_mode = parse_corr_mode(corr_mode);
        return simulate(cfg);
      },
      py::arg("two_j"), py::arg("k"), py::arg("theta"), py::arg("phi"),
      py::arg("n_kicks") = 25, py::arg("representation") = "spin_j",
      py::arg("noise_model") = "", py::arg("noise_strength") = 0.0,
      py::arg("epsilon") = 1.0, py::arg("corr_mode") = "state_overlap");

  m.def("coherent_overlap_AAp", &coherent_overlap_AAp, py::arg("two_j"));
  m.def("trajectory_csv", &trajectory_csv, py::arg("records"));
}
