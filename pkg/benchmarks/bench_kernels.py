"""Compare the compiled and pure-Python polynomial kernels.

Two measurements: the raw kernels on random dense polynomials with rational
coefficients, and the end-to-end ``dybe verify-all`` run in a subprocess
with and without ``DYBE_PURE_PYTHON=1``.

    python benchmarks/bench_kernels.py [--degree 12] [--repeat 5]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from dybe import _poly_py
from dybe.scalars import Rat

try:
    from dybe import _poly_cy
except ImportError:
    _poly_cy = None


def random_poly(rng, degree):
    return tuple(Rat(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(degree)) + (Rat(rng.randint(1, 50)),)


def kernel_cases(degree, rng):
    a, b, c = (random_poly(rng, degree) for _ in range(3))
    ab, ac = _poly_py.mul(a, b), _poly_py.mul(a, c)
    return {
        "mul": lambda k: k.mul(a, b),
        "divmod": lambda k: k.divmod_(ab, b),
        "gcd": lambda k: k.gcd(ab, ac),
        "taylor_shift": lambda k: k.taylor_shift(ab, Rat(3, 2)),
        "evaluate": lambda k: k.evaluate(ab, Rat(-7, 5)),
    }


def time_kernels(degree, repeat):
    rng = random.Random(0)
    cases = kernel_cases(degree, rng)
    for name, case in cases.items():
        if _poly_cy is not None and case(_poly_cy) != case(_poly_py):
            raise SystemExit(f"backends disagree on {name}")
        row = [name]
        for backend in (_poly_py, _poly_cy):
            if backend is None:
                row.append(float("nan"))
                continue
            number = 50
            best = min(timeit.repeat(lambda: case(backend), number=number, repeat=repeat)) / number
            row.append(best * 1e6)
        speedup = row[1] / row[2] if _poly_cy is not None else float("nan")
        print(f"{row[0]:<14}{row[1]:>12.1f}{row[2]:>12.1f}{speedup:>9.2f}x")


def time_pipeline(repeat):
    argv = [sys.executable, "-m", "dybe.cli", "verify-all", "--seed", "0"]
    out = {}
    for label, pure in (("python", "1"), ("cython", "0")):
        env = dict(os.environ, DYBE_PURE_PYTHON=pure)
        code = f"import subprocess; subprocess.run({argv!r}, env={env!r}, check=True, capture_output=True)"
        out[label] = min(timeit.repeat(code, number=1, repeat=repeat))
    print(f"{'verify-all':<14}{out['python']:>11.2f}s{out['cython']:>11.2f}s{out['python'] / out['cython']:>9.2f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-pipeline", action="store_true")
    args = ap.parse_args()
    if _poly_cy is None:
        print("compiled kernel not built; only the Python column is meaningful")
    print(f"{'kernel':<14}{'python us':>12}{'cython us':>12}{'speedup':>10}")
    time_kernels(args.degree, args.repeat)
    if not args.skip_pipeline:
        time_pipeline(max(1, args.repeat // 2))


if __name__ == "__main__":
    main()
