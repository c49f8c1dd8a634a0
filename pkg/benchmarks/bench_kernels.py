"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times each kernel on fixed random integer data, then the end-to-end
generator computation on a random corpus, once per backend.
"""

import argparse
import random
import time
from fractions import Fraction

from tropdual import _backend, orthogonal_generators
from tropdual._kernels_py import IINF


def rand_rows(rng, k, n, p_inf=0.2):
    return [[IINF if rng.random() < p_inf else rng.randint(-30, 30) for _ in range(n)] for _ in range(k)]


def kernel_cases(seed=0):
    rng = random.Random(seed)
    gens = [rand_rows(rng, rng.randint(4, 12), 6) for _ in range(300)]
    points = [rand_rows(rng, 1, 6)[0] for _ in gens]
    squares = [rand_rows(rng, 6, 6, 0.1) for _ in range(300)]
    rects = [rand_rows(rng, 6, 7, 0.1) for _ in range(40)]
    return {
        "residuate": lambda k: [k.residuate(g, x) for g, x in zip(gens, points)],
        "prune_nonextreme": lambda k: [k.prune_nonextreme(g) for g in gens],
        "is_singular": lambda k: [k.is_singular(m) for m in squares],
        "tropical_rank": lambda k: [k.tropical_rank(m) for m in rects],
    }


def corpus(seed=1, count=200):
    rng = random.Random(seed)

    def ext():
        return "inf" if rng.random() < 0.2 else Fraction(rng.randint(-8, 8), rng.randint(1, 4))

    out = []
    for _ in range(count):
        n = rng.randint(2, 5)
        out.append((n, [[ext() for _ in range(n)] for _ in range(rng.randint(0, 3))]))
    return out


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _backend.available_backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the Python backend is available")
    cases = kernel_cases()
    data = corpus()
    rows = []
    for name, fn in cases.items():
        rows.append((name, {b: best_of(lambda: fn(k), args.repeat) for b, k in backends.items()}))

    def end_to_end():
        for n, A in data:
            orthogonal_generators(A, n)

    e2e = {}
    saved = _backend.kernels
    try:
        for b, k in backends.items():
            _backend.kernels = k
            e2e[b] = best_of(end_to_end, args.repeat)
    finally:
        _backend.kernels = saved
    rows.append(("orthogonal_generators x200", e2e))

    names = list(backends)
    print(f"{'kernel':<28}" + "".join(f"{b + ' [s]':>14}" for b in names) + ("    speedup" if len(names) > 1 else ""))
    for name, t in rows:
        line = f"{name:<28}" + "".join(f"{t[b]:>14.4f}" for b in names)
        if "cython" in t:
            line += f"{t['python'] / t['cython']:>10.1f}x"
        print(line)


if __name__ == "__main__":
    main()
