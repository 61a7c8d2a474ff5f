"""Compare the compiled and pure-Python polynomial kernels.

Two levels are timed:

* kernel: raw p_mul / p_add / p_divexact on q-integer style polynomials, per backend;
* end to end: spectrum table generation in a subprocess with and without
  QH_PURE_PYTHON, since the backend is fixed at import.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--bound B]
"""
import argparse
import os
import subprocess
import sys
import time

from qhyper.kernel import available_backends


def _poly(n, seed):
    # dense integer polynomial, the shape produced by products of q-integers
    return tuple((seed * (i + 3) * 7919) % 97 - 48 or 1 for i in range(n))


def bench_kernel(mod, size, repeat):
    a, b = _poly(size, 1), _poly(size, 2)
    prod = mod.p_mul(a, b)
    t0 = time.perf_counter()
    for _ in range(repeat):
        mod.p_mul(a, b)
    t_mul = time.perf_counter() - t0
    t0 = time.perf_counter()
    for _ in range(repeat * 10):
        mod.p_add(a, b)
    t_add = (time.perf_counter() - t0) / 10
    t0 = time.perf_counter()
    for _ in range(repeat):
        mod.p_divexact(prod, a)
    t_div = time.perf_counter() - t0
    return t_mul / repeat, t_add / repeat, t_div / repeat


_E2E = (
    "import time; from qhyper.laplacians import spectrum_table;"
    "from qhyper.kernel import BACKEND;"
    "t = time.perf_counter();"
    "[spectrum_table(w, n, {bound}) for w, n in ((1, 0), (2, 1), (2, 2), (3, -1), (4, 1), (5, -1))];"
    "print(BACKEND, time.perf_counter() - t)"
)


def bench_end_to_end(bound):
    out = {}
    for pure in ("0", "1"):
        env = dict(os.environ, QH_PURE_PYTHON=pure)
        res = subprocess.run(
            [sys.executable, "-c", _E2E.format(bound=bound)], env=env, capture_output=True, text=True, check=True
        )
        name, secs = res.stdout.split()
        out[name] = float(secs)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=2000)
    ap.add_argument("--bound", type=int, default=4)
    args = ap.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'size':>5} {'backend':>8} {'mul us':>9} {'add us':>9} {'div us':>9}")
    for size in (4, 16, 64):
        rows = {}
        for name, mod in backends.items():
            rows[name] = bench_kernel(mod, size, args.repeat)
            m, a, d = (x * 1e6 for x in rows[name])
            print(f"{size:>5} {name:>8} {m:9.2f} {a:9.2f} {d:9.2f}")
        if len(rows) == 2:
            print(f"{'':>5} {'speedup':>8} " + " ".join(f"{p / c:9.2f}" for p, c in zip(rows["python"], rows["cython"])))

    print()
    print(f"spectrum tables, bound {args.bound}:")
    for name, secs in bench_end_to_end(args.bound).items():
        print(f"  {name:>8}: {secs:.3f} s")


if __name__ == "__main__":
    main()
