"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The first numba call compiles (or loads the on-disk cache); it is done once
before timing and reported separately.
"""
from __future__ import annotations

import argparse
import time
import timeit

import numpy as np

from confpart import _kernels


def cases():
    rng = np.random.default_rng(0)
    x = rng.uniform(0.1, 10.0, 60)
    desc = np.array([1.0, 0.0, -3.0, 1.5, -7.0, 0.5, -2.0])
    return {
        "oracle_count(7,7,24)": lambda k: k.oracle_count(7, 7, 24, 10**9),
        "restricted_table(60,3000)": lambda k: k.restricted_table(60, 3000),
        "conformal_row(40,40)": lambda k: k.conformal_row(40, 40),
        "elementary(60 vars)": lambda k: k.elementary(x),
        "bisect(deg 6)": lambda k: k.bisect(desc, 0.0, 10.0, 4e-16, 400),
    }


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return len(a) == len(b) and all(_same(x, y) for x, y in zip(a, b))
    a, b = np.asarray(a), np.asarray(b)
    if a.dtype.kind in "iub":
        return np.array_equal(a, b)
    return np.allclose(a, b, rtol=1e-12, atol=0.0)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")
    print(f"{'kernel':28s} {'numpy [ms]':>12s} {'numba [ms]':>12s} {'speedup':>9s} {'warmup [s]':>11s}")
    for name, fn in cases().items():
        t0 = time.perf_counter()
        fn(_kernels.NUMBA)
        warm = time.perf_counter() - t0
        ref, got = fn(_kernels.NUMPY), fn(_kernels.NUMBA)
        same = _same(ref, got)
        t_np = min(timeit.repeat(lambda: fn(_kernels.NUMPY), number=1, repeat=args.repeat)) * 1e3
        t_nb = min(timeit.repeat(lambda: fn(_kernels.NUMBA), number=1, repeat=args.repeat)) * 1e3
        flag = "" if same else "  (results differ!)"
        print(f"{name:28s} {t_np:12.3f} {t_nb:12.3f} {t_np / t_nb:8.1f}x {warm:11.2f}{flag}")


if __name__ == "__main__":
    main()
