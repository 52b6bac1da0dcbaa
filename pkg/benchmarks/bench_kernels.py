"""Compare the compiled and pure-Python tree kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times canonicalization, grafting and cutting on every tree with at most
nine vertices, then a full bracket sweep in a fresh interpreter per backend
(so the bracket caches start cold).
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

from ielie import _pykernel
from ielie.trees import trees_up_to

try:
    from ielie import _ckernel
except ImportError:
    _ckernel = None

SWEEP = (
    "import time; from ielie.verify import run_suite; t = time.perf_counter(); "
    "assert run_suite('jacobi', 8).passed; print(time.perf_counter() - t)"
)


def _workloads(kernel, codes, shuffled, small):
    def canon():
        for c in shuffled:
            kernel.canonicalize(c)

    def graft():
        for s in codes:
            for t in small:
                kernel.graft_all(s, t)

    def cut():
        for c in codes:
            kernel.cut_all(c)

    return {"canonicalize": canon, "graft_all": graft, "cut_all": cut}


def _sweep(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("IELIE_PURE_PYTHON", None)
    if pure:
        env["IELIE_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernel is None:
        sys.exit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    codes = [t.canon for t in trees_up_to(9)]
    # reversed child order forces real work in canonicalize
    shuffled = [_pykernel.canonicalize(c)[::-1].translate(str.maketrans("()", ")(")) for c in codes]
    small = [t.canon for t in trees_up_to(3)]

    print(f"{len(codes)} trees, best of {args.repeat}")
    print(f"{'workload':<16}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    py = _workloads(_pykernel, codes, shuffled, small)
    cy = _workloads(_ckernel, codes, shuffled, small)
    for name in py:
        tp = min(timeit.repeat(py[name], number=1, repeat=args.repeat)) * 1000
        tc = min(timeit.repeat(cy[name], number=1, repeat=args.repeat)) * 1000
        print(f"{name:<16}{tp:>14.1f}{tc:>14.1f}{tp / tc:>9.1f}x")
    tp, tc = _sweep(True) * 1000, _sweep(False) * 1000
    print(f"{'jacobi sweep 8':<16}{tp:>14.1f}{tc:>14.1f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
