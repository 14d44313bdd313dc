"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--v 120]
"""

import argparse
import time

import numpy as np

from homog3 import _pykernels
from homog3.constructions import random_ngraph
from homog3.kernels import color_bits

try:
    from homog3 import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(v):
    g = random_ngraph(v, 3, 0)
    mat = np.ascontiguousarray(g.matrix)
    bits = color_bits(mat, 3)
    rng = np.random.default_rng(0)
    place = np.ascontiguousarray(np.argsort(rng.random((20_000, v)), axis=1)[:, :3].astype(np.int64))
    slots = np.array([0, 1, 2], dtype=np.int64)
    small = np.ascontiguousarray(random_ngraph(min(v, 40), 3, 1).matrix)
    return [
        ("subset_codes k=4", lambda m: m.subset_codes(small, 4, 3)),
        ("triangle_counts", lambda m: m.triangle_counts(mat, 3)),
        ("extension_exhaustive (1,1,0)", lambda m: m.extension_exhaustive(bits, np.array([1, 1, 0], dtype=np.int64))),
        ("extension_check 20k placements", lambda m: m.extension_check(bits, place, slots)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--v", type=int, default=120, help="vertex count of the random 3-graph")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python timings are shown")
    print(f"{'kernel':34s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in cases(args.v):
        tp = best_of(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:34s} {tp:10.4f} {'-':>10s} {'-':>8s}")
            continue
        tc = best_of(lambda: fn(_ckernels), args.repeat)
        print(f"{name:34s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
