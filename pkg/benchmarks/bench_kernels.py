"""Compare the compiled and numpy quadrature kernels.

Times the kernel alone on node arrays of several sizes, then a batch of
full U/V/E+ evaluations with each backend swapped in.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

from __future__ import annotations

import argparse
import json
import timeit

import numpy as np

from weberpcf import _kernels_py, kernels
from weberpcf.weber_e import E_plus
from weberpcf.weber_uv import U, V

try:
    from weberpcf import _kernels as _compiled
except ImportError:
    _compiled = None


def kernel_case(n: int):
    rng = np.random.default_rng(n)
    t = np.sort(rng.uniform(1e-6, 40.0, n))
    w = rng.uniform(0.0, 1e-2, n)
    return (t, w, 0.3 + 0.2j, 1.5 - 0.4j, [2.0, 2j], [-0.75 + 0.1j, -1.1], [0, 0])


def eval_batch():
    for a in (0.3, -1.7 + 0.5j, 2j):
        for z in (0.8, 1.5 + 0.5j, 3.0, -1.2):
            U(a, z)
            V(a, z)
            E_plus(a, z)


def best_of(fn, repeat: int, number: int) -> float:
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--json", action="store_true")
    args = p.parse_args(argv)

    backends = {"python": _kernels_py.weighted_sum}
    if _compiled is not None:
        backends["cython"] = _compiled.weighted_sum

    rows = []
    for n in (64, 256, 1024, 4096):
        case = kernel_case(n)
        ref = _kernels_py.weighted_sum(*case)
        for name, fn in backends.items():
            val = fn(*case)
            t = best_of(lambda: fn(*case), args.repeat, 200)
            rows.append({"bench": "kernel", "n": n, "backend": name, "seconds": t,
                         "rel_diff": abs(val - ref) / abs(ref)})

    saved = kernels.weighted_sum
    try:
        for name, fn in backends.items():
            kernels.weighted_sum = fn
            eval_batch()  # warm the node caches
            t = best_of(eval_batch, args.repeat, 1)
            rows.append({"bench": "evaluate", "n": 36, "backend": name, "seconds": t, "rel_diff": 0.0})
    finally:
        kernels.weighted_sum = saved

    if args.json:
        print(json.dumps(rows, indent=1))
        return
    print(f"{'bench':10s} {'n':>6s} {'backend':8s} {'time':>12s} {'rel diff':>10s}")
    for r in rows:
        print(f"{r['bench']:10s} {r['n']:6d} {r['backend']:8s} {r['seconds'] * 1e6:10.1f}us {r['rel_diff']:10.1e}")
    if _compiled is None:
        print("compiled backend not built; only the numpy kernel was timed")


if __name__ == "__main__":
    main()
