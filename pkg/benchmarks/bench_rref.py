"""Compare the compiled and pure-Python mod-p row reduction.

    python3 benchmarks/bench_rref.py [--sizes 20 40 80] [--p 10007] [--repeat 5]
"""
import argparse
import random
import timeit

from axialgebra import _pykernels, kernels


def random_rows(n, p, rng):
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80])
    ap.add_argument("--p", type=int, default=10007)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernel not built; only the pure backend is available")
    rng = random.Random(0)
    print(f"{'n':>5} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8}")
    for n in args.sizes:
        rows = random_rows(n, args.p, rng)
        t_py = min(timeit.repeat(lambda: _pykernels.rref_modp(rows, args.p),
                                 number=1, repeat=args.repeat))
        if kernels.BACKEND == "cython":
            from axialgebra import _kernels
            assert _kernels.rref_modp(rows, args.p) == _pykernels.rref_modp(rows, args.p)
            t_cy = min(timeit.repeat(lambda: _kernels.rref_modp(rows, args.p),
                                     number=1, repeat=args.repeat))
            print(f"{n:>5} {t_py:>12.5f} {t_cy:>12.5f} {t_py / t_cy:>8.1f}")
        else:
            print(f"{n:>5} {t_py:>12.5f} {'-':>12} {'-':>8}")


if __name__ == "__main__":
    main()
