"""Pure-Python/numpy versions of the kernels in ``_ckernels.pyx``.

Used when the compiled extension is not built or ``FINSPIN_PURE_PYTHON=1``.
Both implementations follow the same algorithms (partial-pivot LU, monomial
sum, trace formula), so results agree to rounding.
"""
import numpy as np


def _scale_down(z, s):
    # componentwise: numpy would promote s to complex and overflow
    return z.real / s + 1j * (z.imag / s)


def det4_batch(ms):
    a = np.array(ms, dtype=np.complex128, copy=True)
    n = a.shape[0]
    rows = np.arange(n)
    det = np.ones(n, dtype=np.complex128)
    for k in range(4):
        p = k + np.argmax(np.abs(a[:, k:, k]), axis=1)
        swap = p != k
        if swap.any():
            rk = a[rows[swap], k].copy()
            a[rows[swap], k] = a[rows[swap], p[swap]]
            a[rows[swap], p[swap]] = rk
            det[swap] = -det[swap]
        piv = a[:, k, k]
        zero = piv == 0
        det = np.where(zero, 0.0, det * piv)
        # scale by the pivot's largest component: plain complex division
        # overflows for subnormal pivots
        s = np.where(zero, 1.0, np.maximum(np.abs(piv.real), np.abs(piv.imag)))
        safe = np.where(zero, 1.0, _scale_down(piv, s))
        f = _scale_down(a[:, k + 1:, k], s[:, None]) / safe[:, None]
        a[:, k + 1:, k + 1:] -= f[:, :, None] * a[:, k, None, k + 1:]
    return det


def det4(m):
    return complex(det4_batch(np.asarray(m)[None])[0])


def quartic_eval(X, idx, coef):
    X = np.asarray(X, dtype=np.float64)
    return np.prod(X[:, idx], axis=2) @ coef


def l_matrix(D, tau, tau_dual):
    S = D @ tau @ D.conj().T
    # tr(tau^A S_B) = sum_ij tau^A_ij S_B_ji
    T = 0.5 * np.einsum("aij,bji->ab", tau_dual, S)
    return np.ascontiguousarray(T.real), float(np.abs(T.imag).max())
