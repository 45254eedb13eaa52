import numpy as np
import pytest

from finspin import reduction
from finspin.herm16 import quartic_det
from finspin.isometry import random_sl2, split_action_sl2
from finspin.linalg import ResidueError
from finspin.reduction import (GAMMA, GAMMA5, METRIC, ReducedX, bar, bilinear, join,
                               minkowski, quartic_reduced, split)
from helpers import rel_err
from oracles import bilinear_loop

E4 = np.eye(4)


def test_split_examples(rng):
    R = split(np.eye(16)[4])
    assert R.theta == (1, 0, 0, 0)
    assert R.vec == R.vartheta == (0, 0, 0, 0)
    assert (R.s8, R.s13, R.s14, R.s15) == (0, 0, 0, 0)
    assert split(np.eye(16)[8]).s8 == 1
    X = rng.uniform(-1, 1, (1000, 16))
    for x in X:
        np.testing.assert_array_equal(join(split(x)), x)


def test_split_index_map():
    R = split(np.arange(16.0))
    assert R.vec == (0, 1, 2, 3)
    assert R.theta == (4, 5, 6, 7)
    assert R.s8 == 8
    assert R.vartheta == (9, 10, 11, 12)
    assert (R.s13, R.s14, R.s15) == (13, 14, 15)


def test_reduced_json_round_trip(rng):
    R = split(rng.uniform(-1, 1, 16))
    assert ReducedX.from_json(R.to_json()) == R
    with pytest.raises(ValueError):
        ReducedX.from_json({"vec": [0, 0, 0]})
    bad = R.to_json() | {"theta": [1, 2, 3]}
    with pytest.raises(ValueError):
        ReducedX.from_json(bad)


def test_clifford_relations():
    for mu in range(4):
        for nu in range(4):
            anti = GAMMA[mu] @ GAMMA[nu] + GAMMA[nu] @ GAMMA[mu]
            np.testing.assert_array_equal(anti, 2 * METRIC[mu, nu] * E4)


def test_gamma5():
    np.testing.assert_array_equal(GAMMA[0] @ GAMMA[1] @ GAMMA[2] @ GAMMA[3], GAMMA5)
    for mu in range(4):
        np.testing.assert_array_equal(GAMMA5 @ GAMMA[mu] + GAMMA[mu] @ GAMMA5, 0)
    # regression constant computed from the listed matrices
    np.testing.assert_array_equal(GAMMA5 @ GAMMA5, -E4)


def test_majorana_gammas_purely_imaginary():
    # regression constants: all gamma^mu are imaginary, gamma^5 real
    assert not GAMMA.real.any()
    assert not GAMMA5.imag.any()
    # gamma^0 is Hermitian and (i gamma^0) is a real antisymmetric matrix
    np.testing.assert_array_equal(GAMMA[0], GAMMA[0].conj().T)
    np.testing.assert_array_equal((1j * GAMMA[0]).T, -(1j * GAMMA[0]))


def test_bar(rng):
    np.testing.assert_array_equal(bar(E4[0]), GAMMA[0][0])
    np.testing.assert_array_equal(bar(E4[0]), [0, 0, 1j, 0])
    np.testing.assert_array_equal(bar(np.zeros(4)), 0)
    th, a = rng.uniform(-1, 1, 4), rng.uniform(-2, 2)
    np.testing.assert_allclose(bar(a * th), a * bar(th), atol=1e-15)


def test_bilinear_examples(rng):
    for _ in range(20):
        th = rng.uniform(-1, 1, 4)
        assert abs(th @ GAMMA[0] @ th) <= 1e-15  # gamma^0 antisymmetric as a bilinear
    assert bilinear(E4[0], GAMMA[0], E4[0]) == 1
    for _ in range(50):
        th, vt = rng.uniform(-1, 1, 4), rng.uniform(-1, 1, 4)
        for nu in range(4):
            ref = bilinear_loop(th, GAMMA[nu], vt, GAMMA[0])
            assert abs(bilinear(th, GAMMA[nu], vt) - ref) <= 1e-13


def test_bilinears_in_quartic_are_real(rng):
    for _ in range(200):
        th, vt = rng.uniform(-1, 1, 4), rng.uniform(-1, 1, 4)
        for nu in range(4):
            for M in (GAMMA[nu], GAMMA5 @ GAMMA[nu]):
                for a, b in ((th, th), (th, vt), (vt, vt)):
                    assert abs(bilinear(a, M, b).imag) <= 1e-12


def test_currents_real_symmetric_form_oracle(rng):
    # bar(a) gamma^nu b == a^T S_nu b with the real matrix S_nu = Re(gamma^0 gamma^nu)
    S = [(GAMMA[0] @ GAMMA[nu]) for nu in range(4)]
    assert all(not s.imag.any() for s in S)
    for _ in range(50):
        a, b = rng.uniform(-1, 1, 4), rng.uniform(-1, 1, 4)
        for nu in range(4):
            assert abs(bilinear(a, GAMMA[nu], b) - a @ S[nu].real @ b) <= 1e-14


def test_quartic_reduced_examples(rng):
    x = rng.uniform(-1, 1, 4)
    s8, s15 = rng.uniform(-1, 1, 2)
    R = ReducedX(tuple(x), (0,) * 4, s8, (0,) * 4, 0.0, 0.0, s15)
    assert quartic_reduced(R) == pytest.approx(s15 * s8 * minkowski(x, x), abs=1e-15)
    R = ReducedX((0,) * 4, (0,) * 4, 0.7, tuple(rng.uniform(-1, 1, 4)), 0.0, 0.0, 0.0)
    assert quartic_reduced(R) == 0


def test_master_identity(rng):
    X = rng.uniform(-1, 1, (10_000, 16))
    qd = quartic_det(X)
    qr = np.array([quartic_reduced(split(x)) for x in X])
    assert rel_err(qr, qd).max() <= 1e-9


def test_covariance(rng):
    for _ in range(200):
        d, X = random_sl2(rng), rng.uniform(-1, 1, 16)
        lhs = quartic_reduced(split(split_action_sl2(d, X)))
        assert rel_err(lhs, quartic_reduced(split(X))) <= 1e-9


def test_residue_tripwire():
    with pytest.raises(ResidueError):
        reduction._real(1 + 1e-6j, 1.0)
