"""Benchmark the compiled kernels against the pure-Python twins.

Runs the two hot primitives (exact RREF, sparse polynomial normal form) on
seeded workloads against both implementations, then times one end-to-end
idempotent enumeration per backend in subprocesses (the backend is fixed at
import time via AXIAL_PURE_KERNELS).

    python benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from axial import _kernels_py

try:
    from axial import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def random_matrix(rng, n):
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
        for _ in range(n)
    ]


def bench_rref(mod, size, reps, seed=7):
    rng = random.Random(seed)
    matrices = [random_matrix(rng, size) for _ in range(reps)]
    start = time.perf_counter()
    for m in matrices:
        mod.rref([row[:] for row in m])
    return time.perf_counter() - start


def random_reduction_instance(rng, nvars, nterms, ndivisors):
    def poly():
        terms = {}
        while len(terms) < nterms:
            exp = tuple(rng.randint(0, 4) for _ in range(nvars))
            terms[exp] = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        return terms

    target = poly()
    divisors = []
    for _ in range(ndivisors):
        terms = poly()
        lead = max(terms)
        tail = [(e, c) for e, c in terms.items() if e != lead]
        divisors.append((lead, terms[lead], tail))
    return target, divisors


def bench_normal_form(mod, reps, seed=11):
    rng = random.Random(seed)
    instances = [random_reduction_instance(rng, 4, 12, 4) for _ in range(reps)]
    start = time.perf_counter()
    for target, divisors in instances:
        mod.normal_form(dict(target), divisors)
    return time.perf_counter() - start


END_TO_END = (
    "from fractions import Fraction; "
    "from axial.matsuo import symmetric_transpositions, matsuo_algebra; "
    "from axial.fusion import derivation_space; "
    "alg = matsuo_algebra(symmetric_transpositions(6), Fraction(1, 4)); "
    "import time; start = time.perf_counter(); "
    "assert derivation_space(alg).is_zero(); "
    "print(time.perf_counter() - start)"
)


def bench_end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("AXIAL_PURE_KERNELS", None)
    if pure:
        env["AXIAL_PURE_KERNELS"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True
    )
    out.check_returncode()
    return float(out.stdout.strip())


def main():
    if _kernels_c is None:
        print("compiled kernels are not built; nothing to compare")
        return 1
    rows = []
    for size, reps in [(20, 6), (40, 2)]:
        pure = bench_rref(_kernels_py, size, reps)
        fast = bench_rref(_kernels_c, size, reps)
        rows.append((f"rref {size}x{size} x{reps}", pure, fast))
    pure = bench_normal_form(_kernels_py, 400)
    fast = bench_normal_form(_kernels_c, 400)
    rows.append(("normal_form x400", pure, fast))
    rows.append(
        (
            "derivation certificate, 15-dim algebra",
            bench_end_to_end(True),
            bench_end_to_end(False),
        )
    )
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>8}  {'compiled':>8}  speedup")
    for name, p, c in rows:
        print(f"{name:<{width}}  {p:>7.3f}s  {c:>7.3f}s  {p / c:>6.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
