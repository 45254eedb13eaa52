"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--n 10000] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from finspin import kernels
from finspin.herm16 import BASIS, gtensor
from finspin.spinor4 import random_sl4


def cases(n, rng):
    Ms = np.ascontiguousarray(rng.uniform(-1, 1, (n, 4, 4)) + 1j * rng.uniform(-1, 1, (n, 4, 4)))
    X = rng.uniform(-1, 1, (n, 16))
    G = gtensor()
    Ds = [np.ascontiguousarray(random_sl4(rng)) for _ in range(max(1, n // 100))]
    return {
        f"det4_batch   ({n} matrices)": lambda be: be.det4_batch(Ms),
        f"det4 loop    ({n // 10} calls)": lambda be: [be.det4(M) for M in Ms[: n // 10]],
        f"quartic_eval ({n} vectors, {len(G)} terms)":
            lambda be: be.quartic_eval(X, G._idx, G._coef),
        f"l_matrix     ({len(Ds)} matrices)":
            lambda be: [be.l_matrix(D, BASIS.tau, BASIS.dual) for D in Ds],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=10_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.backends()
    if "cython" not in backends:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'kernel':45s}" + "".join(f"{name:>12s}" for name in backends) + "   speedup")
    for label, fn in cases(args.n, np.random.default_rng(0)).items():
        times = {name: min(timeit.repeat(lambda: fn(be), number=1, repeat=args.repeat))
                 for name, be in backends.items()}
        row = f"{label:45s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times.values())
        if len(times) == 2:
            row += f"   {times['python'] / times['cython']:6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
