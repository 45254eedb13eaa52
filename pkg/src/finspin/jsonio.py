"""JSON encodings shared by the library and the CLI.

complex -> [re, im]; 4x4 complex matrix -> 4 rows of 4 [re, im] pairs;
spinor -> 4 [re, im] pairs; 16-vector -> 16 reals; L(D) -> 16 rows of 16 reals.
"""
import numbers

import numpy as np

from .reduction import ReducedX, join


class InputError(ValueError):
    """Malformed JSON input (wrong arity, wrong type, non-finite numbers)."""


def complex_to_json(z):
    z = complex(z)
    return [z.real, z.imag]


def _real(v):
    if isinstance(v, bool) or not isinstance(v, numbers.Real):
        raise InputError(f"expected a number, got {v!r}")
    v = float(v)
    if not np.isfinite(v):
        raise InputError("non-finite number")
    return v


def complex_from_json(v):
    if isinstance(v, list):
        if len(v) != 2:
            raise InputError(f"complex number must be [re, im], got {v!r}")
        return complex(_real(v[0]), _real(v[1]))
    return complex(_real(v))  # bare reals are accepted


def matrix_to_json(M):
    return [[complex_to_json(z) for z in row] for row in np.asarray(M)]


def matrix_from_json(obj, n=4):
    if not isinstance(obj, list) or len(obj) != n:
        raise InputError(f"matrix must be a list of {n} rows")
    rows = []
    for row in obj:
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"every matrix row must have {n} entries")
        rows.append([complex_from_json(v) for v in row])
    return np.array(rows, dtype=np.complex128)


def spinor_to_json(xi):
    return [complex_to_json(z) for z in xi]


def spinor_from_json(obj):
    if not isinstance(obj, list) or len(obj) != 4:
        raise InputError("spinor must be a list of 4 complex numbers")
    return np.array([complex_from_json(v) for v in obj], dtype=np.complex128)


def vec16_to_json(X):
    return [float(x) for x in X]


def vec16_from_json(obj):
    """A 16-vector from a flat list of 16 reals or a reduced-form object."""
    if isinstance(obj, dict):
        try:
            return join(ReducedX.from_json(obj))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if not isinstance(obj, list) or len(obj) != 16:
        raise InputError("16-vector must be a list of 16 reals")
    return np.array([_real(v) for v in obj])


def l16_to_json(L):
    return [[float(v) for v in row] for row in L]
