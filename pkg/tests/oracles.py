"""Independent reference computations used only by the tests."""
import itertools

import numpy as np
import sympy


def perm_sign(p):
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def levi_civita(n=4):
    eps = np.zeros((n,) * n)
    for p in itertools.permutations(range(n)):
        eps[p] = perm_sign(p)
    return eps


def det_laplace(M):
    """Leibniz sum over all permutations."""
    M = np.asarray(M)
    n = M.shape[0]
    return sum(perm_sign(p) * np.prod([M[i, p[i]] for i in range(n)])
               for p in itertools.permutations(range(n)))


def epsilon_product(xi, eta, lam, mu):
    """eps_abcd xi^a eta^b lam^c mu^d, summed term by term."""
    eps = levi_civita()
    total = 0j
    for a, b, c, d in itertools.product(range(4), repeat=4):
        if eps[a, b, c, d]:
            total += eps[a, b, c, d] * xi[a] * eta[b] * lam[c] * mu[d]
    return total


def matmul_naive(A, B):
    n, m, k = A.shape[0], B.shape[1], A.shape[1]
    C = np.zeros((n, m), dtype=np.result_type(A, B))
    for i in range(n):
        for j in range(m):
            for s in range(k):
                C[i, j] += A[i, s] * B[s, j]
    return C


def sympy_gtensor(tau):
    """Coefficients of det(sum X^A tau_A) via sympy's symbolic determinant."""
    xs = sympy.symbols("x0:16", real=True)
    M = sympy.zeros(4, 4)
    for A in range(16):
        M += xs[A] * sympy.Matrix(4, 4, [sympy.nsimplify(complex(z).real) +
                                         sympy.I * sympy.nsimplify(complex(z).imag)
                                         for z in np.asarray(tau[A]).ravel()])
    poly = sympy.Poly(sympy.expand(M.det(method="berkowitz")), *xs)
    out = {}
    for powers, c in poly.terms():
        key = tuple(sorted(A for A, k in enumerate(powers) for _ in range(k)))
        out[key] = c
    return out


def bilinear_loop(theta, M, vartheta, gamma0):
    """sum_ijk theta_i gamma0_ij M_jk vartheta_k."""
    total = 0j
    for i in range(4):
        for j in range(4):
            for k in range(4):
                total += theta[i] * gamma0[i, j] * M[j, k] * vartheta[k]
    return total
