"""Quantum kicked top simulator.

Floquet evolution of spin-j systems, classical-limit phase portraits,
tunneling diagnostics and dephasing channels, backed by the C++ core.
"""

from qktsim._core import (
    AngularMomentumOps,
    CollectiveOps,
    FloquetOperator,
    NumericalIntegrityError,
    PeriodEstimate,
    ResourceCapError,
    Spectrum,
    TrajectoryRecord,
    UsageError,
    build_collective_ops,
    build_floquet,
    build_floquet_collective,
    build_spin_ops,
    casimir_residual,
    classical_step,
    classical_trajectory,
    coherent_overlap_AAp,
    coherent_state_multiqubit,
    coherent_state_spin_j,
    correlation,
    deviation,
    estimate_period,
    evolve_schrodinger,
    expectations,
    expectations_from_reduced,
    generate_portrait,
    make_pseudo_pure,
    named_point,
    qubit_cap,
    simulate,
    spectrum,
    symmetric_subspace_embedding,
    to_cartesian,
    trace_fidelity,
    trajectory_csv,
)

__all__ = [
    "AngularMomentumOps",
    "CollectiveOps",
    "FloquetOperator",
    "NumericalIntegrityError",
    "PeriodEstimate",
    "ResourceCapError",
    "Spectrum",
    "TrajectoryRecord",
    "UsageError",
    "build_collective_ops",
    "build_floquet",
    "build_floquet_collective",
    "build_spin_ops",
    "casimir_residual",
    "classical_step",
    "classical_trajectory",
    "coherent_overlap_AAp",
    "coherent_state_multiqubit",
    "coherent_state_spin_j",
    "correlation",
    "deviation",
    "estimate_period",
    "evolve_schrodinger",
    "expectations",
    "expectations_from_reduced",
    "generate_portrait",
    "make_pseudo_pure",
    "named_point",
    "qubit_cap",
    "simulate",
    "spectrum",
    "symmetric_subspace_embedding",
    "to_cartesian",
    "trace_fidelity",
    "trajectory_csv",
]

__version__ = "0.1.0"
