# Copyright 2026 The spincorr Authors
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np
import pytest

import spincorr as sc


def test_ghz_correlator_hits_quarter():
    n = 6
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    st = sc.make_state(n, amps)
    c, e = sc.correlator(st, "+" * n)
    assert abs(e - 0.25) < 1e-12
    cert = sc.certify(e, n)
    assert cert.ent_depth == n


def test_ising_ground_state_and_operator():
    op = sc.build(sc.ising_chain(8, 1e-3))
    assert op.dimension == 256
    h = op.dense_matrix()
    assert np.allclose(h, h.T)
    v = np.random.default_rng(1).normal(size=256)
    assert np.allclose(op.apply(v), h @ v)
    st = sc.ground_state(op)
    assert st.amplitudes.shape == (256,)
    assert abs(np.linalg.norm(st.amplitudes) - 1) < 1e-10
    _, e_full = sc.correlator(st, sc.alternating_pattern(8))
    _, e_low = sc.correlator(st, sc.alternating_pattern(4))
    assert e_full > 0.249
    assert e_low < 1e-3


def test_bethe_matches_exact_diagonalization():
    n, delta = 8, 0.3
    op = sc.build(sc.xxz_chain(n, delta), n_up=n // 2)
    st = sc.ground_state(op, tol=1e-12)
    _, e_ed = sc.correlator(st, "+-" * (n // 2))
    assert abs(sc.bethe_e_n(sc.bethe_ground(n, delta)) - e_ed) < 1e-8


def test_closed_forms_and_bounds():
    assert abs(sc.xxz4_zero_t(0.0) - sc.xxz4_thermal(0.0, 1e3)) < 1e-9
    assert sc.mg_e_n(4) > 0
    assert abs(sc.entanglement_bound(8, 8) - 0.25) < 1e-15
    assert sc.nonlocality_bound(8, 1) <= sc.nonlocality_bound(8, 8)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        sc.correlator(sc.make_state(2, np.array([1, 0, 0, 0], dtype=complex)), "x")
    with pytest.raises(ValueError):
        sc.entanglement_bound(4, 9)
    with pytest.raises(sc.CapacityError):
        sc.build(sc.xxz_chain(13, 1.0)).dense_matrix()
