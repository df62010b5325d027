"""Compare the numba and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times each kernel on identical inputs under both backends and prints the
median wall time plus the max relative difference between results.
"""

import argparse
import time

import numpy as np

from hfix import _kernels as K
from hfix.roots import initial_guesses


def _median_time(fn, repeat):
    ts = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t0)
    return float(np.median(ts))


def cases(rng):
    for deg in (6, 20, 64):
        c = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
        zs = rng.normal(size=4096) + 1j * rng.normal(size=4096)
        yield f"polyval deg={deg} n=4096", "polyval", (c, zs)
        yield f"aberth deg={deg}", "aberth", (c, initial_guesses(c), 1e-12, 1000)
        den = rng.normal(size=deg) + 1j * rng.normal(size=deg)
        yield f"contour deg={deg} n=4096", "contour", (c, den, 0.1 + 0.2j, 0.05, 4096)


def _first(r):
    return np.asarray(r[0] if isinstance(r, tuple) else r)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if K.NUMBA_KERNELS is None:
        print("numba backend disabled (HFIX_DISABLE_NUMBA set or numba missing); nothing to compare")
        return
    rng = np.random.default_rng(args.seed)
    print(f"{'case':28s} {'numba [ms]':>11s} {'numpy [ms]':>11s} {'speedup':>8s} {'rel diff':>10s}")
    for name, kernel, inputs in cases(rng):
        fa, fb = K.NUMBA_KERNELS[kernel], K.NUMPY_KERNELS[kernel]
        copy = lambda: tuple(np.copy(x) if isinstance(x, np.ndarray) else x for x in inputs)  # noqa: E731
        fa(*copy())  # jit warmup
        ta = _median_time(lambda: fa(*copy()), args.repeat)
        tb = _median_time(lambda: fb(*copy()), args.repeat)
        ra, rb = _first(fa(*copy())), _first(fb(*copy()))
        if kernel == "aberth":
            ra, rb = np.sort_complex(ra), np.sort_complex(rb)
        diff = float(np.max(np.abs(ra - rb) / np.maximum(1.0, np.abs(rb))))
        print(f"{name:28s} {ta * 1e3:11.3f} {tb * 1e3:11.3f} {tb / ta:8.1f} {diff:10.2e}")


if __name__ == "__main__":
    main()
