import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from finspin import kernels
from finspin.herm16 import TAU
from finspin.linalg import (adjoint4, as_matrix, det4, det4_many, is_hermitian, mul4,
                            trace4)
from helpers import rand_complex
from oracles import det_laplace, matmul_naive

unit = st.floats(-1, 1, allow_nan=False)
mat4 = arrays(np.float64, (2, 4, 4), elements=unit).map(lambda a: a[0] + 1j * a[1])


def test_det4_identity_and_diagonal():
    assert det4(np.eye(4)) == 1 + 0j
    assert det4(np.diag([1, 1, 1, -1])) == -1 + 0j


def test_det4_matches_laplace(rng):
    for _ in range(200):
        M = rand_complex(rng, (4, 4))
        ref = det_laplace(M)
        assert abs(det4(M) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_det4_singular():
    M = np.ones((4, 4))
    assert det4(M) == 0
    M = np.zeros((4, 4))
    assert det4(M) == 0


def test_det4_needs_pivoting():
    # zero leading entry: unpivoted elimination would divide by zero
    P = np.eye(4)[[1, 0, 3, 2]]
    assert det4(P) == 1


@pytest.mark.parametrize("name", list(kernels.backends()))
def test_det4_batch_backends(rng, name):
    be = kernels.backends()[name]
    Ms = rand_complex(rng, (50, 4, 4))
    expected = np.array([det_laplace(M) for M in Ms])
    np.testing.assert_allclose(be.det4_batch(np.ascontiguousarray(Ms)), expected, rtol=1e-12, atol=1e-14)


def test_det4_many_shape_checks():
    with pytest.raises(ValueError):
        det4_many(np.zeros((4, 4)))
    with pytest.raises(ValueError):
        det4_many(np.full((2, 4, 4), np.nan))


@pytest.mark.parametrize("bad", [np.zeros((3, 3)), np.zeros(16), np.full((4, 4), np.inf)])
def test_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        det4(bad)


def test_mul_adjoint_trace(rng):
    A, B = rand_complex(rng, (4, 4)), rand_complex(rng, (4, 4))
    np.testing.assert_array_equal(adjoint4(adjoint4(A)), A)
    assert abs(trace4(mul4(A, B)) - trace4(mul4(B, A))) <= 1e-12
    assert np.abs(mul4(A, B) - matmul_naive(A, B)).max() <= 1e-13
    np.testing.assert_array_equal(adjoint4(A), A.conj().T)


def test_is_hermitian(rng):
    assert all(is_hermitian(t, 0.0) for t in TAU)
    M = np.zeros((4, 4), complex)
    M[0, 1] = M[1, 0] = 1j
    assert not is_hermitian(M, 1e-12)
    H = rand_complex(rng, (4, 4))
    H = H + H.conj().T
    D = rand_complex(rng, (4, 4))
    assert is_hermitian(D @ H @ D.conj().T, 1e-10)
    with pytest.raises(ValueError):
        is_hermitian(H, -1.0)


@settings(max_examples=200, deadline=None)
@given(mat4, mat4)
def test_det_multiplicative(A, B):
    lhs = det4(A @ B)
    rhs = det4(A) * det4(B)
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))


@settings(max_examples=200, deadline=None)
@given(mat4)
def test_det_of_adjoint(A):
    assert abs(det4(A.conj().T) - np.conj(det4(A))) <= 1e-12 * max(1.0, abs(det4(A)))


@settings(max_examples=200, deadline=None)
@given(mat4)
def test_hermitian_det_is_real(A):
    H = A + A.conj().T
    d = det4(H)
    assert abs(d.imag) <= 1e-12 * max(1.0, abs(d))


def test_as_matrix_2x2():
    assert as_matrix([[1, 2], [3, 4]], 2).dtype == np.complex128
    with pytest.raises(ValueError):
        as_matrix(np.eye(4), 2)
