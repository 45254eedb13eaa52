"""Isometries of Herm(4) induced by X -> D X D^+.

Block bookkeeping for the SL(2,C) subgroup (``embed_sl2``): the vector block
acts on A = 0..3, the spinor block on theta^i = X^(3+i) (A = 4..7) and on
vartheta^j = X^(8+j) (A = 9..12); A = 8, 13, 14, 15 are fixed.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .herm16 import BASIS, as_vec16, pack, unpack
from .linalg import ResidueError, as_matrix, det2

VECTOR = slice(0, 4)
THETA = slice(4, 8)
VARTHETA = slice(9, 13)
SCALARS = (8, 13, 14, 15)

SL2_TOL = 1e-10
L_RESIDUE_TOL = 1e-12


def induced_transform(D, X):
    """Components of D X D^+ for the 16-vector X."""
    D = as_matrix(D)
    M = D @ pack(as_vec16(X)) @ D.conj().T
    # D X D^+ is Hermitian up to rounding; symmetrize before extraction
    return unpack(0.5 * (M + M.conj().T))


def l_matrix(D, basis=BASIS, residue_tol=L_RESIDUE_TOL):
    """Real 16x16 matrix L(D)^A_B = 1/2 Tr(tau^A D tau_B D^+).

    Raises :class:`ResidueError` when any trace has an imaginary part above
    ``residue_tol * max(1, max|D|^2)``.
    """
    D = as_matrix(D)
    L, resid = l_matrix_with_residue(D, basis)
    if resid > residue_tol * max(1.0, np.abs(D).max() ** 2):
        raise ResidueError(f"L(D) has imaginary residue {resid:.3g}")
    return L


def l_matrix_with_residue(D, basis=BASIS):
    """(L(D), max imaginary residue over the 256 traces), without the check."""
    return kernels.l_matrix(as_matrix(D), basis.tau, basis.dual)


def _sl2(d):
    d = as_matrix(d, 2, "d")
    if abs(det2(d) - 1.0) > SL2_TOL:
        raise ValueError(f"det d = {det2(d):.6g}, expected 1")
    return d


def embed_sl2(d):
    """4x4 matrix with d in the upper-left block and I_2 in the lower-right."""
    D = np.eye(4, dtype=np.complex128)
    D[:2, :2] = _sl2(d)
    return D


def random_sl2(rng, min_abs_det=1e-3):
    """Random d in SL(2,C): uniform entries, rescaled by a square root of 1/det d."""
    rng = np.random.default_rng(rng)
    while True:
        d = rng.uniform(-1, 1, (2, 2)) + 1j * rng.uniform(-1, 1, (2, 2))
        det = det2(d)
        if abs(det) >= min_abs_det:
            return d / np.sqrt(det)


@dataclass(frozen=True)
class SL2Blocks:
    vector_block: np.ndarray
    spinor_block: np.ndarray

    def full(self):
        """Assemble the 16x16 matrix from the blocks and the fixed entries."""
        L = np.zeros((16, 16))
        L[VECTOR, VECTOR] = self.vector_block
        L[THETA, THETA] = self.spinor_block
        L[VARTHETA, VARTHETA] = self.spinor_block
        for k in SCALARS:
            L[k, k] = 1.0
        return L


def block_mask():
    """Boolean 16x16 mask of the entries that may be nonzero for D in SL(2,C)."""
    mask = np.zeros((16, 16), dtype=bool)
    mask[VECTOR, VECTOR] = True
    mask[THETA, THETA] = True
    mask[VARTHETA, VARTHETA] = True
    for k in SCALARS:
        mask[k, k] = True
    return mask


def l_blocks_sl2(d):
    """Closed-form Lorentz (vector) and Majorana (spinor) blocks of L(embed_sl2(d))."""
    d = _sl2(d)
    a, b, c, e = d[0, 0], d[0, 1], d[1, 0], d[1, 1]  # d^1_1, d^1_2, d^2_1, d^2_2
    ac, bc, cc, ec = np.conj(a), np.conj(b), np.conj(c), np.conj(e)
    h, ih = 0.5, 0.5j
    V = np.array([
        [h * (a * ac + b * bc + c * cc + e * ec),
         h * (a * bc + c * ec + b * ac + e * cc),
         ih * (b * ac + e * cc - a * bc - c * ec),
         h * (a * ac + c * cc - b * bc - e * ec)],
        [h * (a * cc + c * ac + b * ec + e * bc),
         h * (a * ec + c * bc + b * cc + e * ac),
         ih * (b * cc + e * ac - a * ec - c * bc),
         h * (a * cc + c * ac - b * ec - e * bc)],
        [ih * (a * cc - c * ac + b * ec - e * bc),
         ih * (a * ec - c * bc + b * cc - e * ac),
         h * (a * ec + e * ac - b * cc - c * bc),
         ih * (a * cc - c * ac - b * ec + e * bc)],
        [h * (a * ac - c * cc + b * bc - e * ec),
         h * (a * bc - c * ec + b * ac - e * cc),
         ih * (b * ac - e * cc - a * bc + c * ec),
         h * (a * ac - b * bc - c * cc + e * ec)],
    ])
    M = np.array([
        [h * (ac + a), ih * (ac - a), h * (bc + b), ih * (bc - b)],
        [ih * (a - ac), h * (a + ac), ih * (b - bc), h * (b + bc)],
        [h * (cc + c), ih * (cc - c), h * (ec + e), ih * (ec - e)],
        [ih * (c - cc), h * (c + cc), ih * (e - ec), h * (e + ec)],
    ])
    return SL2Blocks(np.ascontiguousarray(V.real), np.ascontiguousarray(M.real))


def split_action_sl2(d, X):
    """Apply embed_sl2(d) blockwise: vector block on X^0..X^3, spinor block on
    theta and vartheta, scalars untouched."""
    blocks = l_blocks_sl2(d)
    X = as_vec16(X)
    out = X.copy()
    out[VECTOR] = blocks.vector_block @ X[VECTOR]
    out[THETA] = blocks.spinor_block @ X[THETA]
    out[VARTHETA] = blocks.spinor_block @ X[VARTHETA]
    return out


def lorentz_defect(Lambda):
    """max |Lambda^T g Lambda - g| with g = diag(1, -1, -1, -1)."""
    g = np.diag([1.0, -1.0, -1.0, -1.0])
    return float(np.abs(Lambda.T @ g @ Lambda - g).max())
