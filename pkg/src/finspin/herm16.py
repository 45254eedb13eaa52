"""The 16-dimensional real space Herm(4) of Hermitian 4x4 matrices.

A 16-vector ``X`` holds the components X^A (A = 0..15) of the matrix
``X^A tau_A``. The quartic Finslerian length is ``|X|^4 = det(X^A tau_A)``,
available both as a determinant (:func:`quartic_det`) and as the expanded
integer polynomial :class:`GTensor`.
"""
import itertools
import json
from collections import Counter, defaultdict
from math import factorial, prod

import numpy as np

from . import kernels
from .linalg import DEFAULT_TOL, ResidueError, as_matrix, det4_many, is_hermitian


# Each tau_A as a list of ((row, col), gaussian integer (re, im)) entries,
# rows/cols 0-based.
_TAU_ENTRIES = [
    [((0, 0), (1, 0)), ((1, 1), (1, 0))],
    [((0, 1), (1, 0)), ((1, 0), (1, 0))],
    [((0, 1), (0, -1)), ((1, 0), (0, 1))],
    [((0, 0), (1, 0)), ((1, 1), (-1, 0))],
    [((0, 2), (1, 0)), ((2, 0), (1, 0))],
    [((0, 2), (0, -1)), ((2, 0), (0, 1))],
    [((1, 2), (1, 0)), ((2, 1), (1, 0))],
    [((1, 2), (0, -1)), ((2, 1), (0, 1))],
    [((2, 2), (1, 0))],
    [((0, 3), (1, 0)), ((3, 0), (1, 0))],
    [((0, 3), (0, -1)), ((3, 0), (0, 1))],
    [((1, 3), (1, 0)), ((3, 1), (1, 0))],
    [((1, 3), (0, -1)), ((3, 1), (0, 1))],
    [((2, 3), (1, 0)), ((3, 2), (1, 0))],
    [((2, 3), (0, -1)), ((3, 2), (0, 1))],
    [((3, 3), (1, 0))],
]

#: Indices whose dual basis element is doubled: tau^8 = 2 tau_8, tau^15 = 2 tau_15.
DOUBLED = (8, 15)


def _integer_tables():
    re = np.zeros((16, 4, 4), dtype=np.int64)
    im = np.zeros((16, 4, 4), dtype=np.int64)
    for A, entries in enumerate(_TAU_ENTRIES):
        for (i, j), (r, m) in entries:
            re[A, i, j] = r
            im[A, i, j] = m
    return re, im


class TauBasis:
    """The basis tau_A of Herm(4) and its dual tau^A.

    Entries are Gaussian integers, so the integer tables ``re``/``im`` (and
    ``dual_re``/``dual_im``) are exact; ``tau``/``dual`` are complex128
    copies for floating-point work.
    """

    def __init__(self, re, im, doubled=DOUBLED):
        self.re = np.array(re, dtype=np.int64)
        self.im = np.array(im, dtype=np.int64)
        scale = np.ones(16, dtype=np.int64)
        scale[list(doubled)] = 2
        self.dual_re = self.re * scale[:, None, None]
        self.dual_im = self.im * scale[:, None, None]
        self.tau = np.ascontiguousarray(self.re + 1j * self.im)
        self.dual = np.ascontiguousarray(self.dual_re + 1j * self.dual_im)
        for a in (self.re, self.im, self.dual_re, self.dual_im, self.tau, self.dual):
            a.setflags(write=False)

    def trace_table(self):
        """Exact integer tables (Re, Im) of Tr(tau^A tau_B)."""
        # Tr(P Q) = sum_ij P_ij Q_ji
        a, b = self.dual_re, self.dual_im
        c = self.re.transpose(0, 2, 1)
        d = self.im.transpose(0, 2, 1)
        re = np.einsum("aij,bij->ab", a, c) - np.einsum("aij,bij->ab", b, d)
        im = np.einsum("aij,bij->ab", a, d) + np.einsum("aij,bij->ab", b, c)
        return re, im

    def check_duality(self):
        """True iff Tr(tau^A tau_B) = 2 delta^A_B exactly for all 256 pairs."""
        re, im = self.trace_table()
        return bool((re == 2 * np.eye(16, dtype=np.int64)).all() and (im == 0).all())

    def is_hermitian(self):
        return all(is_hermitian(t, 0.0) for t in self.tau)

    def rank(self):
        """Real rank of the 16 matrices viewed as vectors in R^32."""
        flat = np.hstack([self.re.reshape(16, 16), self.im.reshape(16, 16)])
        return int(np.linalg.matrix_rank(flat.astype(float)))


BASIS = TauBasis(*_integer_tables())
TAU = BASIS.tau
TAU_DUAL = BASIS.dual


def as_vec16(X):
    a = np.ascontiguousarray(X, dtype=np.float64)
    if a.shape[-1:] != (16,) or a.ndim > 2:
        raise ValueError(f"16-vector(s) must have shape (16,) or (n, 16), got {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("16-vector has non-finite entries")
    return a


def pack(X, basis=BASIS):
    """X^A tau_A; accepts shape (16,) or (n, 16)."""
    X = as_vec16(X)
    return np.tensordot(X, basis.tau, axes=(-1, 0))


def unpack(M, tol=DEFAULT_TOL, basis=BASIS):
    """Components X^A = 1/2 Tr(tau^A M) of a Hermitian matrix."""
    M = as_matrix(M)
    if not is_hermitian(M, tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    X = 0.5 * np.einsum("aij,ji->a", basis.dual, M)
    return np.ascontiguousarray(X.real)


def _scale4(X):
    return np.maximum(1.0, np.abs(X).max(axis=-1) ** 4)


def quartic_det(X, tol=1e-10):
    """|X|^4 = Re det(pack(X)); shape (16,) gives a float, (n, 16) an array.

    Raises :class:`ResidueError` if the imaginary residue exceeds
    ``tol * max(1, max|X^A|^4)``.
    """
    X = as_vec16(X)
    batch = X.reshape(-1, 16)
    d = det4_many(pack(batch))
    if (np.abs(d.imag) > tol * _scale4(batch)).any():
        raise ResidueError("det of a Hermitian matrix has a large imaginary part")
    return float(d.real[0]) if X.ndim == 1 else d.real


def finsler_length_from_quartic(q):
    return q ** 0.25 if q >= 0 else None


def finsler_length(X):
    """|X| = (det X)^(1/4), or ``None`` where det X < 0 (length undefined)."""
    return finsler_length_from_quartic(quartic_det(X))


def multiplicity(indices):
    """Number of distinct orderings of an index multiset (4!/prod(k_i!))."""
    return factorial(len(indices)) // prod(factorial(k) for k in Counter(indices).values())


class GTensor:
    """Coefficients of the quartic form det(X^A tau_A).

    ``coeffs`` maps a sorted index tuple (A <= B <= C <= D) to the integer
    coefficient of the monomial X^A X^B X^C X^D, each monomial counted once.
    The fully symmetric tensor component is ``coefficient / multiplicity``
    (see :meth:`component`).
    """

    CONVENTION = (
        "det(X^A tau_A) = sum over terms of coefficient * X^A X^B X^C X^D; "
        "indices sorted, each monomial listed once; symmetric tensor "
        "G_ABCD = coefficient / (4! / prod(count_i!))"
    )

    def __init__(self, coeffs):
        self.coeffs = {}
        for key, c in coeffs.items():
            key = tuple(sorted(int(k) for k in key))
            if len(key) != 4 or not all(0 <= k < 16 for k in key):
                raise ValueError(f"bad index multiset {key}")
            if c:
                self.coeffs[key] = self.coeffs.get(key, 0) + c
        keys = sorted(self.coeffs)
        self._idx = np.array(keys, dtype=np.int64).reshape(-1, 4)
        self._coef = np.array([self.coeffs[k] for k in keys], dtype=np.float64)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, indices):
        return self.coeffs.get(tuple(sorted(indices)), 0)

    def component(self, A, B, C, D):
        """Symmetric tensor value G_ABCD."""
        key = (A, B, C, D)
        return self[key] / multiplicity(key)

    def evaluate(self, X):
        X = as_vec16(X)
        out = kernels.quartic_eval(X.reshape(-1, 16), self._idx, self._coef)
        return float(out[0]) if X.ndim == 1 else out

    def to_json(self):
        terms = [{"indices": list(k), "coefficient": int(self.coeffs[k])}
                 for k in sorted(self.coeffs)]
        return {"convention": self.CONVENTION, "terms": terms}

    def dumps(self):
        return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, obj):
        terms = obj["terms"] if isinstance(obj, dict) else obj
        coeffs = {}
        for t in terms:
            c = t["coefficient"]
            if int(c) != c:
                raise ValueError(f"non-integer coefficient {c!r}")
            coeffs[tuple(t["indices"])] = int(c)
        return cls(coeffs)


def _perm_sign(p):
    inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
    return -1 if inversions % 2 else 1


def build_gtensor(basis=BASIS):
    """Expand det(X^A tau_A) over the 16 indeterminates in exact Gaussian
    integer arithmetic (Leibniz formula over the 24 permutations)."""
    # entries[i][j]: list of (A, re, im) with tau_A[i, j] = re + i*im != 0
    entries = [[[(A, int(basis.re[A, i, j]), int(basis.im[A, i, j]))
                 for A in range(16) if basis.re[A, i, j] or basis.im[A, i, j]]
                for j in range(4)] for i in range(4)]
    acc = defaultdict(lambda: [0, 0])
    for p in itertools.permutations(range(4)):
        s = _perm_sign(p)
        for factors in itertools.product(*(entries[i][p[i]] for i in range(4))):
            re, im = s, 0
            for _, a, b in factors:
                re, im = re * a - im * b, re * b + im * a
            slot = acc[tuple(sorted(f[0] for f in factors))]
            slot[0] += re
            slot[1] += im
    if any(im for _, im in acc.values()):
        raise ResidueError("determinant expansion of a Hermitian matrix is not real")
    return GTensor({k: re for k, (re, _) in acc.items()})


_GTENSOR = None


def gtensor():
    """Cached :func:`build_gtensor` result for the standard basis."""
    global _GTENSOR
    if _GTENSOR is None:
        _GTENSOR = build_gtensor()
    return _GTENSOR


def quartic_form(X, G=None):
    """|X|^4 from the expanded polynomial G (default: the standard table)."""
    return (G if G is not None else gtensor()).evaluate(X)
