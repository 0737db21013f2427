"""Compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Kernel timings use both modules side by side; the end-to-end timing runs a corpus
computation in a subprocess with and without ``SUBINT_PURE_PYTHON=1``.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from subint import _pykernels as py

try:
    from subint import _ckernels as cy
except ImportError:  # not built
    cy = None

END_TO_END = ("from subint.suites import run_suite; "
              "r = run_suite('prop3.7', truncs=[2]); assert r.ok")


def _cases(rng, p=5):
    mat = [[rng.randrange(p) for _ in range(60)] for _ in range(60)]
    a = [rng.randrange(p) for _ in range(400)]
    b = [rng.randrange(p) for _ in range(400)]
    dim = 12
    flat = [rng.randrange(p) if rng.random() < 0.2 else 0 for _ in range(dim ** 3)]
    x = [rng.randrange(p) for _ in range(dim)]
    y = [rng.randrange(p) for _ in range(dim)]
    return {
        "rref 60x60 mod 5": lambda m: m.rref_mod(mat, p),
        "poly mul deg 400 mod 5": lambda m: m.poly_mul_mod(a, b, p),
        "algebra mul dim 12": lambda m, k={}: k.setdefault(m, m.AlgebraKernel(flat, dim, p)).mul(x, y),
    }


def _end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["SUBINT_PURE_PYTHON"] = "1"
    code = f"import time; t = time.perf_counter(); {END_TO_END}; print(time.perf_counter() - t)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args(argv)
    rng = random.Random(7)
    print(f"{'kernel':28s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn in _cases(rng).items():
        tp = min(timeit.repeat(lambda: fn(py), number=args.number, repeat=args.repeat))
        if cy is None:
            print(f"{name:28s} {1e3 * tp / args.number:10.3f} {'n/a':>10s}")
            continue
        assert fn(py) == fn(cy), name
        tc = min(timeit.repeat(lambda: fn(cy), number=args.number, repeat=args.repeat))
        print(f"{name:28s} {1e3 * tp / args.number:10.3f} {1e3 * tc / args.number:10.3f} "
              f"{tp / tc:8.1f}x")
    if not args.skip_end_to_end:
        tp = _end_to_end(True)
        tc = _end_to_end(False) if cy is not None else float("nan")
        print(f"{'prop3.7 suite (d=2)':28s} {1e3 * tp:10.1f} {1e3 * tc:10.1f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
