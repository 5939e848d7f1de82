"""Smoke tests for the python bindings: operator algebra, coherent states,
a full tunneling run, the classical map and spectrum analysis."""

import math

import numpy as np
import pytest

import qktsim


def test_spin_ops_algebra():
    ops = qktsim.build_spin_ops(2)
    assert ops.dim == 3
    assert ops.j == pytest.approx(1.0)
    jx, jy, jz = ops.jx, ops.jy, ops.jz
    comm = jx @ jy - jy @ jx - 1j * jz
    assert np.abs(comm).max() < 1e-12
    assert qktsim.casimir_residual(jx, jy, jz, 1.0) < 1e-12
    np.testing.assert_allclose(np.diag(jz).real, [1.0, 0.0, -1.0], atol=1e-14)


def test_collective_ops_match_spin_on_symmetric_subspace():
    coll = qktsim.build_collective_ops(2)
    spin = qktsim.build_spin_ops(2)
    p = qktsim.symmetric_subspace_embedding(2)
    restricted = p.conj().T @ coll.jx @ p
    assert np.abs(restricted - spin.jx).max() < 1e-12


def test_coherent_state_anchor():
    theta, phi = qktsim.named_point("A")
    psi = qktsim.coherent_state_spin_j(4, theta, phi)
    ops = qktsim.build_spin_ops(4)
    rho = np.outer(psi, psi.conj())
    ev = qktsim.expectations(rho, ops.jx, ops.jy, ops.jz, ops.j)
    assert ev == pytest.approx(qktsim.to_cartesian(theta, phi), abs=1e-10)


def test_floquet_is_unitary():
    f = qktsim.build_floquet(3, 3.0)
    u = f.u
    assert np.abs(u.conj().T @ u - np.eye(4)).max() < 1e-10


def test_tunneling_run():
    theta, phi = qktsim.named_point("A")
    traj = qktsim.simulate(two_j=2, k=3.0, theta=theta, phi=phi, n_kicks=25)
    assert len(traj) == 26
    assert traj[0].fid_A == pytest.approx(1.0, abs=1e-10)

    max_fid_ap = max(r.fid_Ap for r in traj[1:])
    assert max_fid_ap > 0.94

    est = qktsim.estimate_period([r.jz for r in traj])
    assert not est.aperiodic
    assert abs(est.period_kicks - 25.0 / 3.5) < 1.0


def test_dephasing_damps_oscillations():
    theta, phi = qktsim.named_point("A")
    amps = []
    for lam in (0.0, 0.2):
        traj = qktsim.simulate(
            two_j=2, k=3.0, theta=theta, phi=phi, n_kicks=25,
            noise_model="coherence_order", noise_strength=lam,
        )
        ca = [r.corr_A for r in traj[10:]]
        amps.append(max(ca) - min(ca))
    assert amps[1] < amps[0]


def test_classical_step_fixed_point():
    x, y, z = qktsim.classical_step(0.0, 1.0, 0.0, 3.0)
    assert (x, y, z) == pytest.approx((0.0, 1.0, 0.0), abs=1e-14)

    # the pole is elliptic at k=0, so the coordinate form stays put there
    traj = qktsim.classical_trajectory(math.pi / 2, math.pi / 2, 0.0, 50)
    assert traj.shape == (51, 2)
    np.testing.assert_allclose(traj[:, 0], math.pi / 2, atol=1e-10)


def test_portrait_shape_and_bounds():
    pts = qktsim.generate_portrait(3.0, 6, 20)
    assert pts.shape == (6 * 6 * 21, 4)
    assert pts[:, 2].min() >= 0.0
    assert pts[:, 2].max() <= math.pi
    assert pts[:, 3].min() >= 0.0
    assert pts[:, 3].max() < 2 * math.pi


def test_spectrum_known_tone():
    series = [math.cos(2 * math.pi * t / 4) for t in range(25)]
    spec = qktsim.spectrum(series)
    assert spec.peak_frequency == pytest.approx(0.25, abs=1 / 256)


def test_overlap_scan_values():
    assert qktsim.coherent_overlap_AAp(2) == pytest.approx(
        0.433769024743, abs=1e-9
    )
    assert qktsim.coherent_overlap_AAp(10) < 0.1


def test_resource_cap_raises():
    with pytest.raises(MemoryError):
        qktsim.build_collective_ops(qktsim.qubit_cap() + 1)
