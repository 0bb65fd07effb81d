"""Compare the compiled and pure-Python row-reduction kernels.

Usage: python3 benchmarks/bench_rref.py [--sizes 40,80,120] [--repeat 3]

The workload mirrors the real call sites: dense integer matrices of small
entries (differential matrices of graded pieces) reduced to fraction-free
Gauss-Jordan form.
"""

import argparse
import random
import time

from cdga._core import rref_py


def backends():
    out = {"python": rref_py.rref_int}
    try:
        from cdga._core import _rref_cy
        out["cython"] = _rref_cy.rref_int
    except ImportError:
        pass
    return out


def run(sizes, repeat):
    rng = random.Random(20240817)
    impls = backends()
    print(f"{'size':>10} " + " ".join(f"{name:>12}" for name in impls))
    for n in sizes:
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        timings = {}
        results = {}
        for name, fn in impls.items():
            best = None
            for _ in range(repeat):
                work = [r[:] for r in m]
                t0 = time.perf_counter()
                results[name] = fn(work, n)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            timings[name] = best
        if len(results) == 2:
            assert results["python"] == results["cython"], "kernels disagree"
        print(f"{n:>8}^2 " + " ".join(f"{timings[name]:>11.4f}s"
                                      for name in impls))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="40,80,120")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    run([int(s) for s in args.sizes.split(",")], args.repeat)


if __name__ == "__main__":
    main()
