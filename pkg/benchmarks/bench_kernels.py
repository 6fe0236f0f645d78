"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--order 16] [--repeat 5]

Micro benchmarks call both kernel modules directly; the end-to-end timings
run a fresh interpreter per backend so that the import-time selection in
``degbern.kernels`` is exercised exactly as users get it.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from degbern import _pykernels
from degbern.scalars import LAMBDA, lambda_product

try:
    from degbern import _kernels
except ImportError:
    _kernels = None

END_TO_END = """
import time
from degbern.scalars import LAMBDA
from degbern.sequences import poly_bernoulli_table, deg_stirling1_table
from degbern.kernels import BACKEND
t = time.perf_counter()
for k in range(-2, 5):
    poly_bernoulli_table(k, LAMBDA, {order}, "gf")
    poly_bernoulli_table(k, LAMBDA, {order}, "explicit")
deg_stirling1_table(LAMBDA, {order}, "gf")
print(BACKEND, time.perf_counter() - t)
"""


def _time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def micro(order, repeat):
    rng = random.Random(0)
    small = [[rng.randint(-50, 50) for _ in range(order)] for _ in range(2)]
    big = [[rng.randint(-10 ** 40, 10 ** 40) for _ in range(order)] for _ in range(2)]
    fracs = [[Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(order + 1)]
             for _ in range(2)]
    polys = [[lambda_product(n + 1) * Fraction(1, n + 1) + LAMBDA for n in range(order + 1)]
             for _ in range(2)]
    cases = [
        ("convolve_int small", lambda m: m.convolve_int(*small)),
        ("convolve_int big", lambda m: m.convolve_int(*big)),
        ("cauchy Fraction", lambda m: m.cauchy(*fracs, Fraction(0))),
        ("cauchy LambdaPolynomial", lambda m: m.cauchy(*polys, 0)),
    ]
    print(f"{'kernel':28s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s}")
    for name, call in cases:
        py = _time(lambda: call(_pykernels), repeat) * 1e3
        if _kernels is None:
            print(f"{name:28s} {py:12.3f} {'n/a':>12s}")
            continue
        cy = _time(lambda: call(_kernels), repeat) * 1e3
        print(f"{name:28s} {py:12.3f} {cy:12.3f} {py / cy:8.2f}")


def end_to_end(order):
    print(f"\nend to end: poly-Bernoulli (gf + explicit, k = -2..4) and S_1, symbolic lambda, N = {order}")
    for pure in ("1", "0"):
        env = dict(os.environ, DEGBERN_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", END_TO_END.format(order=order)],
                             env=env, capture_output=True, text=True, check=True)
        backend, seconds = out.stdout.split()
        print(f"  {backend:8s} {float(seconds):8.3f} s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order", type=int, default=16)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    micro(args.order + 1, args.repeat)
    end_to_end(args.order)


if __name__ == "__main__":
    main()
