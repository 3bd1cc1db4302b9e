"""Times the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/compare_backends.py [N] [K] [repeats]
"""

import sys
import time

import numpy as np

from rankenrich import backend
from rankenrich import _pure


def one_test(impl, v, K, N):
    s, _, _ = backend.statistic_scan(v, K, 0, N, impl=impl)
    R = backend.region_scan(s, K, N - K, 0, N, impl=impl)
    m = backend.dp_survival(R, K, N - K, impl=impl)
    return 1.0 - m


def bench(impl, label, v, K, N, repeats):
    best = float("inf")
    p = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        p = one_test(impl, v, K, N)
        best = min(best, time.perf_counter() - t0)
    print(f"{label:>10}: {best * 1000:9.2f} ms   p = {p:.6g}")
    return best, p


def main():
    N = int(sys.argv[1]) if len(sys.argv) > 1 else 10_000
    K = int(sys.argv[2]) if len(sys.argv) > 2 else 500
    repeats = int(sys.argv[3]) if len(sys.argv) > 3 else 3

    rng = np.random.default_rng(0)
    v = np.zeros(N, dtype=np.int8)
    # moderate top-half enrichment so the rejection region is non-trivial
    t = int(0.75 * K)
    v[rng.choice(N // 2, size=t, replace=False)] = 1
    v[N // 2 + rng.choice(N - N // 2, size=K - t, replace=False)] = 1

    print(f"single full test (statistic + exact p-value), N={N}, K={K}")
    impls = [(_pure, "pure")]
    try:
        from rankenrich import _speed
        impls.append((_speed, "compiled"))
    except ImportError:
        print("compiled extension not available")
    results = [bench(impl, label, v, K, N, repeats) for impl, label in impls]
    if len(results) == 2:
        (tp, pp), (tc, pc) = results
        # 1 - m is cancellation-dominated for strongly enriched lists, so
        # compare at absolute precision
        assert abs(pp - pc) <= 1e-9, "backends disagree"
        print(f"{'speedup':>10}: {tp / tc:9.1f} x")


if __name__ == "__main__":
    main()
