"""Dimensional reduction of Herm(4) under the embedded SL(2,C).

A 16-vector splits into a Lorentz 4-vector X^mu (A = 0..3), two real Majorana
spinors theta (A = 4..7) and vartheta (A = 9..12), and scalars X^8, X^13,
X^14, X^15. :func:`quartic_reduced` writes the quartic length in terms of
these pieces using Dirac matrices in the Majorana representation.
"""
from dataclasses import dataclass

import numpy as np

from .herm16 import as_vec16
from .linalg import ResidueError, as_vector

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)
_g = np.diag(METRIC)

_i = 1j
GAMMA = np.array([
    [[0, 0, _i, 0], [0, 0, 0, -_i], [-_i, 0, 0, 0], [0, _i, 0, 0]],
    [[_i, 0, 0, 0], [0, -_i, 0, 0], [0, 0, -_i, 0], [0, 0, 0, _i]],
    [[0, _i, 0, 0], [_i, 0, 0, 0], [0, 0, 0, _i], [0, 0, _i, 0]],
    [[0, 0, -_i, 0], [0, 0, 0, _i], [-_i, 0, 0, 0], [0, _i, 0, 0]],
], dtype=np.complex128)
GAMMA5 = np.array(
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], dtype=np.complex128
)
GAMMA.setflags(write=False)
GAMMA5.setflags(write=False)

BILINEAR_RESIDUE_TOL = 1e-12


@dataclass(frozen=True)
class ReducedX:
    vec: tuple
    theta: tuple
    s8: float
    vartheta: tuple
    s13: float
    s14: float
    s15: float

    def to_json(self):
        return {"vec": list(self.vec), "theta": list(self.theta), "s8": self.s8,
                "vartheta": list(self.vartheta), "s13": self.s13,
                "s14": self.s14, "s15": self.s15}

    @classmethod
    def from_json(cls, obj):
        try:
            vec, theta, vartheta = (
                tuple(float(v) for v in as_vector(obj[k], 4, k, np.float64))
                for k in ("vec", "theta", "vartheta"))
            scalars = [float(obj[k]) for k in ("s8", "s13", "s14", "s15")]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed reduced 16-vector: {exc}") from exc
        if not np.isfinite(scalars).all():
            raise ValueError("reduced 16-vector has non-finite entries")
        s8, s13, s14, s15 = scalars
        return cls(vec, theta, s8, vartheta, s13, s14, s15)


def split(X):
    X = [float(x) for x in as_vec16(X)]
    return ReducedX(tuple(X[0:4]), tuple(X[4:8]), X[8], tuple(X[9:13]),
                    X[13], X[14], X[15])


def join(R):
    return np.array([*R.vec, *R.theta, R.s8, *R.vartheta, R.s13, R.s14, R.s15])


def bar(theta):
    """Dirac adjoint of a real spinor: the row theta^T gamma^0."""
    return as_vector(theta, 4, "theta", np.float64) @ GAMMA[0]


def bilinear(theta, M, vartheta):
    """bar(theta) M vartheta as a complex number."""
    return complex(bar(theta) @ M @ as_vector(vartheta, 4, "vartheta", np.float64))


def _real(z, scale):
    if abs(z.imag) > BILINEAR_RESIDUE_TOL * max(1.0, scale):
        raise ResidueError(f"spinor bilinear has imaginary part {z.imag:.3g}")
    return z.real


def _currents(a, b, M_pre=None):
    """Real 4-vector (bar(a) [M_pre] gamma^nu b) for nu = 0..3."""
    scale = max(np.abs(a).max(), np.abs(b).max(), 0.0) ** 2
    out = np.empty(4)
    for nu in range(4):
        M = GAMMA[nu] if M_pre is None else M_pre @ GAMMA[nu]
        out[nu] = _real(bilinear(a, M, b), scale)
    return out


def minkowski(u, v):
    return float(np.sum(_g * np.asarray(u) * np.asarray(v)))


def quartic_reduced(R):
    """|X|^4 from the 4-dimensional pieces of X.

    X^15 [X^8 (X.X) - X.j(theta,theta)] - [(X^13)^2 + (X^14)^2] (X.X)
    - X^8 X.j(vt,vt) + 2 X^13 X.j(theta,vt) + 2 X^14 X.j5(theta,vt)
    + 1/2 j(theta,theta).j(vt,vt),
    where j(a,b)^nu = bar(a) gamma^nu b, j5(a,b)^nu = bar(a) gamma^5 gamma^nu b
    and the dot is the Minkowski product with g = diag(1, -1, -1, -1).
    """
    x = np.asarray(R.vec, dtype=float)
    th = np.asarray(R.theta, dtype=float)
    vt = np.asarray(R.vartheta, dtype=float)
    xx = minkowski(x, x)
    j_tt = _currents(th, th)
    j_vv = _currents(vt, vt)
    j_tv = _currents(th, vt)
    j5_tv = _currents(th, vt, GAMMA5)
    return (R.s15 * (R.s8 * xx - minkowski(x, j_tt))
            - (R.s13 ** 2 + R.s14 ** 2) * xx
            - R.s8 * minkowski(x, j_vv)
            + 2 * R.s13 * minkowski(x, j_tv)
            + 2 * R.s14 * minkowski(x, j5_tv)
            + 0.5 * minkowski(j_tt, j_vv))
