"""Finslerian 4-spinors: the symplectic scalar 4-product on C^4, the
pseudounitary (twistor) product, and membership tests for SL(4,C) and SU(2,2).

A spinor is a length-4 complex array; component ``xi[a-1]`` is xi^a.
"""
import numpy as np
from scipy.linalg import expm

from .linalg import DEFAULT_TOL, as_matrix, as_vector, det4

#: Gram matrix of the pseudounitary form, signature (+, +, -, -).
TWISTOR_GRAM = np.diag([1.0, 1.0, -1.0, -1.0]).astype(np.complex128)
TWISTOR_GRAM.setflags(write=False)


def spinor(components):
    return as_vector(components, 4, "spinor")


def symplectic_product(xi, eta, lam, mu):
    """[xi, eta, lam, mu] = eps_abcd xi^a eta^b lam^c mu^d with eps_1234 = 1.

    Evaluated as the determinant of the matrix with columns xi, eta, lam, mu.
    """
    cols = np.column_stack([spinor(xi), spinor(eta), spinor(lam), spinor(mu)])
    return det4(cols)


def pseudounitary_product(xi, eta):
    """<xi, eta> = xi^1 conj(eta^1) + xi^2 conj(eta^2) - xi^3 conj(eta^3) - xi^4 conj(eta^4)."""
    xi, eta = spinor(xi), spinor(eta)
    return complex(xi @ TWISTOR_GRAM @ eta.conj())


def is_sl4(D, tol=DEFAULT_TOL):
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return abs(det4(D) - 1.0) <= tol


def su22_defect(D):
    """max |(D^+ H D - H)_ab| for the twistor Gram matrix H."""
    D = as_matrix(D)
    return float(np.abs(D.conj().T @ TWISTOR_GRAM @ D - TWISTOR_GRAM).max())


def is_su22(D, tol=DEFAULT_TOL):
    return is_sl4(D, tol) and su22_defect(D) <= tol


def random_sl4(rng, min_abs_det=1e-3):
    """Random element of SL(4,C).

    Entries are drawn uniformly from [-1, 1] + i[-1, 1]; draws with
    ``|det| < min_abs_det`` are rejected, then the matrix is scaled by the
    principal fourth root of ``1/det``.
    """
    rng = np.random.default_rng(rng)
    while True:
        D = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
        d = det4(D)
        if abs(d) >= min_abs_det:
            return D * (1.0 / d) ** 0.25


def su22_generator(rng, scale=0.5):
    """Random traceless u with u^+ H + H u = 0 (Lie algebra of SU(2,2))."""
    rng = np.random.default_rng(rng)
    Z = rng.normal(scale=scale, size=(4, 4)) + 1j * rng.normal(scale=scale, size=(4, 4))
    A = 0.5 * (Z - Z.conj().T)  # anti-Hermitian
    u = TWISTOR_GRAM @ A
    # Tr(H A) is purely imaginary, so removing it keeps the defining relation
    return u - (np.trace(u) / 4.0) * np.eye(4)


def su22_sample(seed, scale=0.5):
    """Element of SU(2,2): exp(u) for a seeded random generator u.

    The exponential is computed by scipy's scaling-and-squaring Pade scheme.
    """
    return expm(su22_generator(seed, scale))
