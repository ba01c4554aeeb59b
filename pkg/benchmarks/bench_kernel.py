"""Compiled vs pure-Python polynomial kernel.

Runs the same workloads through cordal._ckernel and cordal._pykernel and
prints a timing table. Each workload is checked to give identical
results under both kernels before it is timed.

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import importlib
import statistics
import time

from cordal import _pykernel
from cordal.braid import parse_braid

WORD = "a1 a1 a0 a1^-1 a1"
STRANDS = 2


def _image(kern, letters, t, cache):
    """Phi of a word on one generator, built only from kern's functions."""
    from cordal.action import _alpha_0, _alpha_0_inv, _alpha_k, _alpha_k_inv

    key = (letters, t)
    if key in cache:
        return cache[key]
    if not letters:
        out = kern.normalize({((t,), 0, 0, 0): 1})
    else:
        k, s = letters[-1]
        i, j, x = t
        if k == 0:
            terms = _alpha_0(i, j, x) if s > 0 else _alpha_0_inv(i, j, x)
        else:
            terms = _alpha_k(k, i, j, x) if s > 0 else _alpha_k_inv(k, i, j, x)
        raw = {}
        for c, e, w in terms:
            kern.iadd(raw, {(w, e[0], e[1], e[2]): c})
        first = kern.normalize(raw)
        head = letters[:-1]
        out = first if not head else kern.substitute(first, lambda u: _image(kern, head, u, cache))
    cache[key] = out
    return out


def workload_action(kern):
    beta = parse_braid(WORD, STRANDS)
    out = {}
    for i in range(1, STRANDS + 1):
        for j in range(1, STRANDS + 1):
            for x in (-2, -1, 1, 2):
                out[(i, j, x)] = _image(kern, beta.letters, (i, j, x), {})
    return out


def workload_mul(kern):
    beta = parse_braid(WORD, STRANDS)
    a = _image(kern, beta.letters, (1, 2, 1), {})
    b = _image(kern, beta.letters, (2, 3, -1), {})
    return kern.normalize(kern.mul(a, b))


WORKLOADS = {"action images": workload_action, "product + normalize": workload_mul}


def bench(fn, kern, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(kern)
        times.append(time.perf_counter() - t)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    try:
        ck = importlib.import_module("cordal._ckernel")
    except ImportError:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` with Cython available")
        return 1
    print(f"{'workload':<22}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, fn in WORKLOADS.items():
        if fn(ck) != fn(_pykernel):
            print(f"{name}: kernels disagree")
            return 1
        tp = bench(fn, _pykernel, args.repeat)
        tc = bench(fn, ck, args.repeat)
        print(f"{name:<22}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
