"""Randomized property suites behind ``finspin check``.

Each property draws from its own generator ``numpy.random.default_rng([seed,
crc32(name)])`` (PCG64), so a single property can be rerun in isolation with
the same numbers and a fixed seed reproduces the whole report.
"""
import itertools
import json
import zlib
from dataclasses import asdict, dataclass, field

import numpy as np

from . import herm16, isometry, reduction, spinor4
from .herm16 import BASIS, TauBasis, quartic_det, quartic_form
from .linalg import det4

EXACT = "exact"


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    samples: int = 1000
    tol: float | None = None
    corrupt_tau: bool = False
    only: tuple = ()

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.tol is not None and not self.tol > 0:
            raise ValueError("tol must be > 0")


@dataclass
class Record:
    name: str
    samples: int
    max_error: float | None
    threshold: float
    passed: bool
    seed: int


@dataclass
class CheckReport:
    config: dict
    records: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    def to_json(self):
        return {"config": self.config, "passed": self.passed,
                "records": [asdict(r) for r in self.records]}

    def dumps(self):
        return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"

    def summary(self):
        lines = []
        for r in self.records:
            mark = "PASS" if r.passed else "FAIL"
            err = "error" if r.max_error is None else f"{r.max_error:.3e}"
            lines.append(f"{mark} {r.name:28s} n={r.samples:<6d} "
                         f"max_error={err} threshold={r.threshold:.1e}")
        failed = [r for r in self.records if not r.passed]
        lines.append(f"{len(self.records) - len(failed)}/{len(self.records)} properties passed")
        for r in failed:
            lines.append(f"rerun: finspin check --seed {r.seed} --only {r.name}")
        return "\n".join(lines)


def corrupted_basis():
    """tau_5 with one conjugate entry sign-flipped: no longer Hermitian, duality broken."""
    re, im = np.array(BASIS.re), np.array(BASIS.im)
    im[5, 2, 0] = -im[5, 2, 0]
    return TauBasis(re, im)


def _rel(a, b):
    return np.abs(np.asarray(a) - np.asarray(b)) / np.maximum(1.0, np.abs(b))


def _vec16(rng, n):
    return rng.uniform(-1, 1, (n, 16))


def _spinors(rng, k=4):
    return [rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4) for _ in range(k)]


def _sym(vs, D=None):
    if D is not None:
        vs = [D @ v for v in vs]
    return spinor4.symplectic_product(*vs)


# Every property: fn(rng, n, ctx) -> (samples, max_error)

def p_trace_duality(rng, n, ctx):
    re, im = ctx["basis"].trace_table()
    err = np.abs(re - 2 * np.eye(16, dtype=np.int64)).max() + np.abs(im).max()
    return 256, float(err)


def p_tau_hermitian(rng, n, ctx):
    tau = ctx["basis"].tau
    return 16, float(np.abs(tau - tau.conj().transpose(0, 2, 1)).max())


def p_round_trip(rng, n, ctx):
    basis = ctx["basis"]
    X = _vec16(rng, n)
    err = 0.0
    for x, M in zip(X, herm16.pack(X, basis)):
        M = 0.5 * (M + M.conj().T)
        err = max(err, np.abs(herm16.unpack(M, np.inf, basis) - x).max())
    return n, float(err)


def p_quartic_oracle(rng, n, ctx):
    X = _vec16(rng, n)
    return n, float(_rel(quartic_form(X), quartic_det(X)).max())


def p_gtensor_leading_term(rng, n, ctx):
    G = herm16.build_gtensor()
    ints = all(isinstance(c, int) for c in G.coeffs.values())
    return len(G), float(abs(G[(0, 0, 8, 15)] - 1) + (0 if ints else 1))


def p_homogeneity(rng, n, ctx):
    X = _vec16(rng, n)
    t = rng.uniform(-2, 2, n)
    return n, float(_rel(quartic_det(t[:, None] * X), t ** 4 * quartic_det(X)).max())


def p_symplectic_antisymmetry(rng, n, ctx):
    err = 0.0
    for _ in range(max(1, n // 24)):
        vs = _spinors(rng)
        base = _sym(vs)
        for p in itertools.permutations(range(4)):
            sign = np.linalg.det(np.eye(4)[list(p)])
            err = max(err, abs(_sym([vs[i] for i in p]) - sign * base))
    return max(1, n // 24) * 24, float(err)


def p_symplectic_isometry(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        D = spinor4.random_sl4(rng)
        vs = _spinors(rng)
        err = max(err, _rel(_sym(vs, D), _sym(vs)))
    return n, float(err)


def p_symplectic_scaling(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        D = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
        vs = _spinors(rng)
        err = max(err, _rel(_sym(vs, D), det4(D) * _sym(vs)))
    return n, float(err)


def p_induced_isometry(rng, n, ctx):
    err = 0.0
    for x in _vec16(rng, n):
        D = spinor4.random_sl4(rng)
        err = max(err, _rel(quartic_det(isometry.induced_transform(D, x)), quartic_det(x)))
    return n, float(err)


def p_induced_scaling(rng, n, ctx):
    err = 0.0
    for x in _vec16(rng, n):
        D = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
        expected = abs(det4(D)) ** 2 * quartic_det(x)
        err = max(err, _rel(quartic_det(isometry.induced_transform(D, x)), expected))
    return n, float(err)


def p_l_identity(rng, n, ctx):
    return 1, float(np.abs(isometry.l_matrix(np.eye(4)) - np.eye(16)).max())


def p_l_realness(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        err = max(err, isometry.l_matrix_with_residue(spinor4.random_sl4(rng))[1])
    return n, float(err)


def p_l_action(rng, n, ctx):
    err = 0.0
    for x in _vec16(rng, n):
        D = spinor4.random_sl4(rng)
        err = max(err, np.abs(isometry.l_matrix(D) @ x
                              - isometry.induced_transform(D, x)).max())
    return n, float(err)


def p_l_homomorphism(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        D1, D2 = spinor4.random_sl4(rng), spinor4.random_sl4(rng)
        err = max(err, np.abs(isometry.l_matrix(D1 @ D2)
                              - isometry.l_matrix(D1) @ isometry.l_matrix(D2)).max())
    return n, float(err)


def p_sl2_blocks(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        d = isometry.random_sl2(rng)
        L = isometry.l_matrix(isometry.embed_sl2(d))
        b = isometry.l_blocks_sl2(d)
        err = max(err, np.abs(L[0:4, 0:4] - b.vector_block).max(),
                  np.abs(L[4:8, 4:8] - b.spinor_block).max(),
                  np.abs(L[9:13, 9:13] - b.spinor_block).max())
    return n, float(err)


def p_sl2_zero_pattern(rng, n, ctx):
    mask = isometry.block_mask()
    err = 0.0
    for _ in range(n):
        L = isometry.l_matrix(isometry.embed_sl2(isometry.random_sl2(rng)))
        fixed = np.abs(np.diag(L)[list(isometry.SCALARS)] - 1).max()
        err = max(err, np.abs(L[~mask]).max(), fixed)
    return n, float(err)


def p_lorentz_metric(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        Lam = isometry.l_blocks_sl2(isometry.random_sl2(rng)).vector_block
        err = max(err, isometry.lorentz_defect(Lam), abs(np.linalg.det(Lam) - 1))
    return n, float(err)


def p_lorentz_orthochronous(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        Lam = isometry.l_blocks_sl2(isometry.random_sl2(rng)).vector_block
        err = max(err, 1.0 - Lam[0, 0])
    return n, float(err)


def p_lorentz_kernel(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        d = isometry.random_sl2(rng)
        err = max(err, np.abs(isometry.l_blocks_sl2(d).vector_block
                              - isometry.l_blocks_sl2(-d).vector_block).max())
    return n, float(err)


def p_clifford(rng, n, ctx):
    G, g = reduction.GAMMA, reduction.METRIC
    err = max(np.abs(G[a] @ G[b] + G[b] @ G[a] - 2 * g[a, b] * np.eye(4)).max()
              for a in range(4) for b in range(4))
    return 16, float(err)


def p_gamma5(rng, n, ctx):
    G = reduction.GAMMA
    return 1, float(np.abs(G[0] @ G[1] @ G[2] @ G[3] - reduction.GAMMA5).max())


def p_reduction_identity(rng, n, ctx):
    X = _vec16(rng, n)
    qr = [reduction.quartic_reduced(reduction.split(x)) for x in X]
    return n, float(_rel(qr, quartic_det(X)).max())


def p_reduction_covariance(rng, n, ctx):
    err = 0.0
    for x in _vec16(rng, n):
        d = isometry.random_sl2(rng)
        y = isometry.split_action_sl2(d, x)
        err = max(err, _rel(reduction.quartic_reduced(reduction.split(y)),
                            reduction.quartic_reduced(reduction.split(x))))
    return n, float(err)


def p_su22_membership(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        D = spinor4.su22_sample(rng)
        err = max(err, abs(det4(D) - 1), spinor4.su22_defect(D))
    return n, float(err)


def p_su22_preserves_forms(rng, n, ctx):
    err = 0.0
    for _ in range(n):
        D = spinor4.su22_sample(rng)
        vs = _spinors(rng)
        err = max(err, _rel(_sym(vs, D), _sym(vs)),
                  _rel(spinor4.pseudounitary_product(D @ vs[0], D @ vs[1]),
                       spinor4.pseudounitary_product(vs[0], vs[1])))
    return n, float(err)


def p_su22_rejection(rng, n, ctx):
    wrong = 0
    for _ in range(n):
        D = spinor4.random_sl4(rng)
        while spinor4.su22_defect(D) <= 0.1:
            D = spinor4.random_sl4(rng)
        wrong += spinor4.is_su22(D, 1e-9)
    return n, float(wrong)


def p_indefiniteness(rng, n, ctx):
    missing = {1, -1, 0}
    for x in _vec16(rng, n):
        missing.discard(int(np.sign(quartic_form(x))))
    # random samples almost surely miss the null cone; X^0..X^3 alone give a
    # matrix supported on the upper-left 2x2 block, hence singular
    x = np.zeros(16)
    x[:4] = rng.uniform(-1, 1, 4)
    if quartic_form(x) == 0 and quartic_det(x) == 0:
        missing.discard(0)
    return n + 1, float(len(missing))


PROPERTIES = [
    ("trace_duality", EXACT, p_trace_duality),
    ("tau_hermitian", EXACT, p_tau_hermitian),
    ("round_trip", 1e-13, p_round_trip),
    ("quartic_oracle", 1e-10, p_quartic_oracle),
    ("gtensor_leading_term", EXACT, p_gtensor_leading_term),
    ("quartic_homogeneity", 1e-10, p_homogeneity),
    ("symplectic_antisymmetry", 1e-12, p_symplectic_antisymmetry),
    ("symplectic_isometry", 1e-10, p_symplectic_isometry),
    ("symplectic_det_scaling", 1e-10, p_symplectic_scaling),
    ("induced_isometry", 1e-9, p_induced_isometry),
    ("induced_det_scaling", 1e-9, p_induced_scaling),
    ("l_identity", 1e-14, p_l_identity),
    ("l_realness", 1e-12, p_l_realness),
    ("l_action", 1e-10, p_l_action),
    ("l_homomorphism", 1e-9, p_l_homomorphism),
    ("sl2_blocks", 1e-12, p_sl2_blocks),
    ("sl2_zero_pattern", 1e-12, p_sl2_zero_pattern),
    ("lorentz_metric", 1e-9, p_lorentz_metric),
    ("lorentz_orthochronous", 1e-12, p_lorentz_orthochronous),
    ("lorentz_kernel", 1e-12, p_lorentz_kernel),
    ("clifford", EXACT, p_clifford),
    ("gamma5", EXACT, p_gamma5),
    ("reduction_identity", 1e-9, p_reduction_identity),
    ("reduction_covariance", 1e-9, p_reduction_covariance),
    ("su22_membership", 1e-9, p_su22_membership),
    ("su22_preserves_forms", 1e-9, p_su22_preserves_forms),
    ("su22_rejection", EXACT, p_su22_rejection),
    ("indefiniteness", EXACT, p_indefiniteness),
]

NAMES = [name for name, _, _ in PROPERTIES]


def run(config=RunConfig()):
    unknown = set(config.only) - set(NAMES)
    if unknown:
        raise ValueError(f"unknown properties: {sorted(unknown)}")
    ctx = {"basis": corrupted_basis() if config.corrupt_tau else BASIS}
    report = CheckReport(config=asdict(config) | {"only": list(config.only)})
    for name, threshold, fn in PROPERTIES:
        if config.only and name not in config.only:
            continue
        rng = np.random.default_rng([config.seed, zlib.crc32(name.encode())])
        if threshold == EXACT:
            threshold = 0.0
        elif config.tol is not None:
            threshold = config.tol
        try:
            samples, err = fn(rng, config.samples, ctx)
        except (ArithmeticError, ValueError):
            samples, err = 0, None
        passed = err is not None and err <= threshold
        report.records.append(Record(name, samples, err, threshold, passed, config.seed))
    return report
