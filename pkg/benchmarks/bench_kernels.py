#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the enumeration and classification hot paths on both backends and
prints a small table.  Usage: python benchmarks/bench_kernels.py [max_n]
(default max_n 6; pass 7 for the heavy run).
"""

import sys
import time

from hausnum._kernels import _pykernels

try:
    from hausnum._kernels import _fastcore
except ImportError:
    _fastcore = None


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return time.perf_counter() - start, result


def run(max_n: int) -> None:
    backends = [("pure", _pykernels)]
    if _fastcore is not None:
        backends.append(("compiled", _fastcore))
    else:
        print("compiled kernels not built; timing the pure backend only\n")

    tasks = []
    for n in range(4, max_n + 1):
        tasks.append((f"enumerate preorders n={n}",
                      lambda k, n=n: k.preorder_rows(n)))
        tasks.append((f"classify with classes n={n}",
                      lambda k, n=n: k.classify(n)))
        tasks.append((f"classify labeled-only n={n}",
                      lambda k, n=n: k.classify(n, want_classes=False)))

    width = max(len(label) for label, _ in tasks)
    header = f"{'task':<{width}}  " + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, task in tasks:
        times = []
        results = []
        for _, kernels in backends:
            elapsed, result = timed(task, kernels)
            times.append(elapsed)
            results.append(result)
        if len(results) == 2:
            pure_res, fast_res = results
            if isinstance(pure_res, tuple):  # classify output
                assert pure_res[0] == fast_res[0] and pure_res[1] == fast_res[1]
                assert pure_res[2] == fast_res[2]
            else:
                assert pure_res == fast_res
        row = f"{label:<{width}}  " + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    run(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
