"""Benchmark: compiled order-decision kernels against the pure fallback.

Times the three witness kernels on random predicate workloads, then a
macro workload (the full order matrix of a bounded completion fiber)
driven through each backend.  Run with:

    python3 benchmarks/bench_core.py
"""

import random
import time

from doctrines import _core_py

try:
    from doctrines import _core
except ImportError:
    _core = None

from doctrines.completion import EX, Completion
from doctrines.doctrine import PowersetDoctrine


def timed(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best


def kernel_workload(mod, calls):
    def run():
        for name, args in calls:
            getattr(mod, name)(*args)

    return run


def make_calls(rng, n_calls=20000):
    calls = []
    for _ in range(n_calls):
        na, nb, nc = rng.randint(1, 4), rng.randint(0, 6), rng.randint(0, 6)
        alpha = rng.randrange(1 << (na * nb)) if na * nb else 0
        beta = rng.randrange(1 << (na * nc)) if na * nc else 0
        calls.append(("ex_witness", (na, nb, nc, alpha, beta)))
        calls.append(("un_witness", (na, nb, nc, alpha, beta)))
    for _ in range(n_calls // 10):
        nb, nc, nb2, nc2 = (rng.randint(1, 4) for _ in range(4))
        alpha = rng.randrange(1 << (nb * nc))
        beta = rng.randrange(1 << (nb2 * nc2))
        calls.append(("dial_witness", (nb, nc, nb2, nc2, alpha, beta)))
    return calls


class ForcedBackend(PowersetDoctrine):
    def __init__(self, mod):
        super().__init__()
        self.mod = mod

    def ex_witness(self, a, b, c, alpha, beta):
        return self.mod.ex_witness(a, b, c, alpha, beta)

    def un_witness(self, a, b, c, alpha, beta):
        return self.mod.un_witness(a, b, c, alpha, beta)


def macro_workload(mod):
    comp = Completion(ForcedBackend(mod), EX)
    elems = comp.bounded_fiber(2, 3)

    def run():
        for x in elems:
            for y in elems:
                comp.leq(x, y)

    return run


def report(name, pure_s, compiled_s):
    if compiled_s is None:
        print(f"{name:<28} pure {pure_s * 1e3:8.1f} ms   compiled unavailable")
    else:
        print(
            f"{name:<28} pure {pure_s * 1e3:8.1f} ms   compiled {compiled_s * 1e3:8.1f} ms"
            f"   speedup {pure_s / compiled_s:5.1f}x"
        )


def main():
    rng = random.Random(2024)
    calls = make_calls(rng)
    # agreement spot check before timing anything
    if _core is not None:
        for name, args in calls[:2000]:
            assert getattr(_core, name)(*args) == getattr(_core_py, name)(*args)

    pure = timed(kernel_workload(_core_py, calls))
    compiled = timed(kernel_workload(_core, calls)) if _core else None
    report(f"kernels ({len(calls)} calls)", pure, compiled)

    pure_m = timed(macro_workload(_core_py), repeat=3)
    compiled_m = timed(macro_workload(_core), repeat=3) if _core else None
    report("bounded-fiber order matrix", pure_m, compiled_m)


if __name__ == "__main__":
    main()
