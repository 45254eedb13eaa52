"""Fixed-shape complex matrix arithmetic.

Matrices are numpy ``complex128`` arrays of shape (4, 4) or (2, 2). Row and
column indices 0..3 here correspond to the indices 1..4 used in the
mathematical notation (``d^a_b`` with a, b = 1..4 lives at ``D[a-1, b-1]``).

Every public function rejects NaN/Inf and wrongly shaped input with
``ValueError``.
"""
import numpy as np

from . import kernels

DEFAULT_TOL = 1e-10


class ResidueError(ArithmeticError):
    """A quantity that must be real carried an imaginary residue above threshold."""


def as_matrix(M, n=4, name="matrix"):
    """Coerce ``M`` to a C-contiguous complex (n, n) array, validating it."""
    a = np.ascontiguousarray(M, dtype=np.complex128)
    if a.shape != (n, n):
        raise ValueError(f"{name} must have shape ({n}, {n}), got {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError(f"{name} has non-finite entries")
    return a


def as_vector(v, n, name="vector", dtype=np.complex128):
    a = np.ascontiguousarray(v, dtype=dtype)
    if a.shape != (n,):
        raise ValueError(f"{name} must have shape ({n},), got {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError(f"{name} has non-finite entries")
    return a


def det4(M):
    """Determinant of a 4x4 complex matrix by partial-pivot LU."""
    return kernels.det4(as_matrix(M))


def det4_many(Ms):
    """Determinants of a stack of shape (n, 4, 4)."""
    a = np.ascontiguousarray(Ms, dtype=np.complex128)
    if a.ndim != 3 or a.shape[1:] != (4, 4):
        raise ValueError(f"expected shape (n, 4, 4), got {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrices have non-finite entries")
    return kernels.det4_batch(a)


def det2(d):
    d = as_matrix(d, 2)
    return complex(d[0, 0] * d[1, 1] - d[0, 1] * d[1, 0])


def mul4(A, B):
    return as_matrix(A) @ as_matrix(B)


def adjoint4(A):
    """Conjugate transpose A^+."""
    return as_matrix(A).conj().T.copy()


def trace4(A):
    return complex(np.trace(as_matrix(A)))


def is_hermitian(M, tol=DEFAULT_TOL):
    if tol < 0:
        raise ValueError("tol must be non-negative")
    M = as_matrix(M)
    return bool(np.abs(M - M.conj().T).max() <= tol)
