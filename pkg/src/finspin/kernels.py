"""Kernel backend selection.

The Cython extension ``finspin._ckernels`` is used when it imports; otherwise
the numpy fallback ``finspin._pykernels`` is used. Set ``FINSPIN_PURE_PYTHON=1``
to force the fallback.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("FINSPIN_PURE_PYTHON") != "1":
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

det4 = _impl.det4
det4_batch = _impl.det4_batch
quartic_eval = _impl.quartic_eval
l_matrix = _impl.l_matrix


def backends():
    """Available backends as a ``{name: module}`` dict, compiled first."""
    out = {}
    if compiled_backend is not None:
        out["cython"] = compiled_backend
    out["python"] = python_backend
    return out
