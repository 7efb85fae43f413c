"""Compare the compiled and pure-Python form-enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [D ...]

Prints one line per (kernel, D) with best-of-N wall time for each backend and
the speedup. Results of both backends are checked for equality first.
"""
import argparse
import time

from cmpoly import _kernels_py

try:
    from cmpoly import _kernels
except ImportError:
    _kernels = None

DEFAULT_DS = [1_000_003, 10_000_019, 109_200_299]


def best_of(fn, D, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(D)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("Ds", nargs="*", type=int, default=DEFAULT_DS)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'kernel':>14} {'D':>12} {'h':>6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for D in args.Ds:
        forms = _kernels.reduced_forms(D)
        assert forms == _kernels_py.reduced_forms(D), f"backends disagree at D={D}"
        assert abs(_kernels.hilbert_sum(D) - _kernels_py.hilbert_sum(D)) < 1e-9
        for name in ("reduced_forms", "hilbert_sum", "weber_forms"):
            py = best_of(getattr(_kernels_py, name), D, args.repeat)
            cy = best_of(getattr(_kernels, name), D, args.repeat)
            print(f"{name:>14} {D:>12} {len(forms):>6} {py:>10.3f} {cy:>10.3f} {py / cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
