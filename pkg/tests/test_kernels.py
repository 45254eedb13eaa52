import os
import subprocess
import sys

import numpy as np
import pytest

from finspin import kernels
from finspin.herm16 import BASIS, gtensor
from finspin.spinor4 import random_sl4
from helpers import rand_complex


def test_backend_names():
    assert kernels.BACKEND in kernels.backends()
    assert "python" in kernels.backends()


@pytest.mark.parametrize("flag, expected", [("1", "python")])
def test_env_forces_fallback(flag, expected):
    env = dict(os.environ, FINSPIN_PURE_PYTHON=flag)
    out = subprocess.run([sys.executable, "-c", "import finspin; print(finspin.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout
    assert out.strip() == expected


@pytest.mark.skipif(kernels.compiled_backend is None, reason="extension not built")
def test_compiled_and_fallback_agree(rng):
    c, p = kernels.compiled_backend, kernels.python_backend
    Ms = np.ascontiguousarray(rand_complex(rng, (200, 4, 4)))
    np.testing.assert_allclose(c.det4_batch(Ms), p.det4_batch(Ms), rtol=1e-13, atol=1e-15)
    assert abs(c.det4(Ms[0]) - p.det4(Ms[0])) <= 1e-14
    G = gtensor()
    X = rng.uniform(-1, 1, (200, 16))
    np.testing.assert_allclose(c.quartic_eval(X, G._idx, G._coef),
                               p.quartic_eval(X, G._idx, G._coef), rtol=1e-13, atol=1e-14)
    D = np.ascontiguousarray(random_sl4(rng))
    Lc, rc = c.l_matrix(D, BASIS.tau, BASIS.dual)
    Lp, rp = p.l_matrix(D, BASIS.tau, BASIS.dual)
    np.testing.assert_allclose(Lc, Lp, atol=1e-13)
    assert rc <= 1e-12 and rp <= 1e-12


@pytest.mark.parametrize("name", list(kernels.backends()))
def test_det4_zero_pivot_column(name):
    be = kernels.backends()[name]
    M = np.zeros((1, 4, 4), complex)
    M[0, :, 0] = 0
    M[0, 0, 1:] = 1
    assert be.det4_batch(M)[0] == 0
