"""Compare the compiled and pure-Python kernel backends.

Run ``python3 benchmarks/bench_kernels.py``.  Each kernel is timed on the
same seeded inputs under both backends and the results are checked for
equality; an end-to-end timing of the distinguished construction follows,
using a subprocess per backend so the import-time selection applies.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from invsurf import _kernels_py

try:
    from invsurf import _kernels_c
except ImportError:
    _kernels_c = None


def make_inputs(seed):
    rng = random.Random(seed)
    n = 16
    scale = [rng.choice([1, 2, 3, 5, 6, 10, 15, 30]) for _ in range(n * n)]
    a = [rng.randint(-10**12, 10**12) for _ in range(n)]
    b = [rng.randint(-10**12, 10**12) for _ in range(n)]

    def rand_poly(terms):
        return {
            tuple(rng.randint(0, 4) for _ in range(3)): Fraction(rng.randint(-99, 99), rng.randint(1, 50))
            for _ in range(terms)
        }

    pa, pb = rand_poly(30), rand_poly(30)
    mat = [[rng.randint(-10**6, 10**6) for _ in range(13)] for _ in range(12)]
    num = [rng.randint(1, 10**20) * 6 for _ in range(8)]
    return {
        "mq_mul": ((a, b, scale), 2000),
        "poly_mul": ((pa, pb), 200),
        "int_echelon": ((mat, 13), 200),
        "normalize": ((num, 6 * 10**15), 20000),
    }


def bench_kernels(seed):
    rows = []
    for name, (args, number) in make_inputs(seed).items():
        f_py = getattr(_kernels_py, name)
        t_py = min(timeit.repeat(lambda: f_py(*args), number=number, repeat=3)) / number
        if _kernels_c is not None:
            f_c = getattr(_kernels_c, name)
            if f_c(*args) != f_py(*args):
                raise SystemExit(f"{name}: backends disagree")
            t_c = min(timeit.repeat(lambda: f_c(*args), number=number, repeat=3)) / number
        else:
            t_c = None
        rows.append((name, t_py, t_c))
    return rows


END_TO_END = """
import time
from invsurf.distinguished import construct_distinguished, seventh_idempotent
from invsurf.exact.tower import create_tower
from invsurf._native import BACKEND
K = create_tower([2, 3, 5])
s2, s3, s5 = K.gen(0), K.gen(1), K.gen(2)
t = time.perf_counter()
for _ in range(5):
    df = construct_distinguished([[s2, s3, 0], [0, s3, s5], [s2, 0, s5]])
    seventh_idempotent(df)
print(BACKEND, (time.perf_counter() - t) / 5)
"""


def bench_end_to_end():
    out = []
    for pure in ("1", "0"):
        env = dict(os.environ, INVSURF_PURE_PYTHON=pure)
        res = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        out.append((backend, float(secs)))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--skip-end-to-end", action="store_true")
    args = parser.parse_args()
    if _kernels_c is None:
        print("compiled kernels not built; timing the Python backend only")
    print(f"{'kernel':<12} {'python (us)':>12} {'cython (us)':>12} {'speedup':>8}")
    for name, t_py, t_c in bench_kernels(args.seed):
        c_txt = f"{t_c * 1e6:12.2f}" if t_c else f"{'-':>12}"
        sp = f"{t_py / t_c:7.2f}x" if t_c else f"{'-':>8}"
        print(f"{name:<12} {t_py * 1e6:12.2f} {c_txt} {sp}")
    if not args.skip_end_to_end:
        print()
        for backend, secs in bench_end_to_end():
            print(f"construct + seventh idempotent, {backend:<7} backend: {secs * 1000:8.1f} ms")


if __name__ == "__main__":
    main()
