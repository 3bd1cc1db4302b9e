"""Acceptance gate: one test per top-level requirement.

Each test finishes by printing a single ``CRITERION ... PASS`` line so the
run log doubles as a checklist.
"""

import math
import time
from bisect import bisect_right
from functools import lru_cache
from itertools import combinations

import numpy as np
import pytest

from rankenrich import (
    HGParams,
    RankedList,
    ScenarioSpec,
    TestParams,
    compute_statistic,
    cutoff_pvalues,
    lipson_bound,
    path_survival,
    pmf_direct,
    pvalue_dp,
    simulate,
    tail_sf,
)
from rankenrich.hypergeom import (
    step_dec_k,
    step_diag,
    step_inc_k,
    step_inc_kn,
    step_inc_n,
    step_k_eq_K,
)
from rankenrich.oracle import naive_statistic

from conftest import V_EX

REL = 1e-12


def done(name):
    print(f"CRITERION {name}: PASS")


class TestWorkedExample:
    def test_worked_example_regression(self):
        rl = RankedList(V_EX)
        pvals = cutoff_pvalues(rl)
        assert pvals[4] == pytest.approx(0.073, abs=0.0005)
        assert pvals[3] == pytest.approx(0.032, abs=0.0005)
        assert pvals[5] == pytest.approx(0.014, abs=0.0005)
        stat = compute_statistic(rl)
        assert stat.n_star == 6
        assert stat.k_star == 4
        p = pvalue_dp(stat.s, rl.K, rl.W)
        assert p == pytest.approx(0.024, abs=0.0005)
        bound = lipson_bound(stat.s, rl.K)
        assert bound == pytest.approx(0.07, abs=0.005)
        assert bound >= p
        done("worked-example regression")


def _param_grid(N, K):
    xs = {0, 1, math.ceil(K / 2), K, K + 1}
    ls = {0, 1, math.ceil(N / 2), N}
    return [(x, l) for x in sorted(xs) for l in sorted(ls)]


def _check_universe(N, K, lists):
    """Cross-check engine vs oracle for every list, amortizing enumeration.

    The null distribution of the statistic over C(N, K) equally likely lists
    is computed once per (N, K, X, L); each list's reference p-value is then
    a rank lookup in that distribution.
    """
    universe = list(combinations(range(N), K))
    total = len(universe)
    for X, L in _param_grid(N, K):
        params = TestParams(X=X, L=L)
        stats = []
        for ones in universe:
            v = tuple(1 if i in ones else 0 for i in range(N))
            stats.append(naive_statistic(v, params))
        ordered = sorted(stats)
        pv_cache = {}
        for v in lists:
            rl = RankedList(v)
            want_s = naive_statistic(v, params)
            got = compute_statistic(rl, params)
            assert got.s == pytest.approx(want_s, rel=REL)
            if got.s not in pv_cache:
                want_p = bisect_right(ordered, got.s * (1 + REL)) / total
                got_p = 1.0 if got.s >= 1.0 else pvalue_dp(got.s, K, N - K, params)
                assert got_p == pytest.approx(want_p, abs=1e-12)
                pv_cache[got.s] = True


class TestOracleEquivalence:
    def test_all_small_lists_and_random_medium(self):
        for N in range(1, 13):
            for K in range(N + 1):
                lists = [
                    tuple(1 if i in ones else 0 for i in range(N))
                    for ones in combinations(range(N), K)
                ]
                _check_universe(N, K, lists)
        rng = np.random.default_rng(14)
        by_k = {}
        for _ in range(200):
            v = tuple(int(x) for x in rng.integers(0, 2, size=14))
            by_k.setdefault(sum(v), []).append(v)
        for K, lists in sorted(by_k.items()):
            _check_universe(14, K, lists)
        done("oracle equivalence (all N<=12 lists, 200 random N=14)")


@lru_cache(maxsize=None)
def _pmf(N, K, n, k):
    return pmf_direct(HGParams(N, K, n, k))


class TestIdentitySuite:
    def test_all_six_identities_full_domain(self):
        steps = {
            "inc_k": (step_inc_k, lambda N, K, n, k: (N, K, n, k + 1)),
            "inc_n": (step_inc_n, lambda N, K, n, k: (N, K, n + 1, k)),
            "inc_kn": (step_inc_kn, lambda N, K, n, k: (N, K, n + 1, k + 1)),
            "diag": (step_diag, lambda N, K, n, k: (N, K, n + 1, n + 1)),
            "k_eq_K": (step_k_eq_K, lambda N, K, n, k: (N, K, n + 1, K)),
            "dec_k": (step_dec_k, lambda N, K, n, k: (N, K, n, k - 1)),
        }

        def legal(N, K, n, k):
            return max(0, n - (N - K)) <= k <= min(n, K)

        for N in range(1, 51):
            for K in range(N + 1):
                for n in range(N + 1):
                    lo, hi = max(0, n + K - N), min(n, K)
                    norm = sum(_pmf(N, K, n, k) for k in range(lo, hi + 1))
                    assert abs(norm - 1.0) <= 1e-12
                    for k in range(lo, hi + 1):
                        src = HGParams(N, K, n, k)
                        f = _pmf(N, K, n, k)
                        for name, (step, target) in steps.items():
                            if name == "diag" and (k != n or n + 1 > K):
                                continue
                            if name == "k_eq_K" and (k != K or n + 1 <= K):
                                continue
                            tN, tK, tn, tk = target(N, K, n, k)
                            if tn > tN or not legal(tN, tK, tn, tk):
                                continue
                            want = _pmf(tN, tK, tn, tk)
                            got = step(f, src)
                            if want == 0.0:
                                assert got == pytest.approx(0.0, abs=1e-300)
                            else:
                                assert abs(got - want) <= 1e-10 * want
        done("six recurrence identities vs log-gamma direct, N<=50")


class TestEmptyRegion:
    def test_all_paths_survive(self):
        rng = np.random.default_rng(200)
        for _ in range(100):
            N = int(rng.integers(2, 201))
            K = int(rng.integers(1, N))
            W = N - K
            empty = np.zeros((K + 1, W + 1), dtype=np.uint8)
            assert path_survival(empty, K, W) == pytest.approx(1.0, abs=1e-12)
        done("empty-region path count equals 1 (100 random sizes, N<=200)")


class TestSandwich:
    def test_thousand_random_lists(self):
        rng = np.random.default_rng(300)
        checked = 0
        while checked < 1000:
            N = int(rng.integers(2, 201))
            K = int(rng.integers(1, N))
            ones = rng.choice(N, size=K, replace=False)
            v = np.zeros(N, dtype=int)
            v[ones] = 1
            rl = RankedList(tuple(v))
            s = compute_statistic(rl).s
            p = 1.0 if s >= 1.0 else pvalue_dp(s, rl.K, rl.W)
            assert s <= p * (1 + 1e-12)
            assert p <= lipson_bound(s, rl.K) * (1 + 1e-12)
            checked += 1
        done("sandwich bounds s <= p <= min(1, K*s) on 1000 random lists")


class TestScenario2:
    def test_outlier_detection_and_x_penalty(self):
        base = dict(kind="scenario2", N=1000, K=100, outliers=6,
                    replicates=1000, seed=2026)
        plain = simulate(ScenarioSpec(**base))
        assert plain.fraction_significant > 0.5
        raised_x = simulate(ScenarioSpec(params=TestParams(X=15), **base))
        assert raised_x.fraction_significant < plain.fraction_significant
        done("scenario 2: 6 outliers detected, X=15 suppresses them")


class TestScenario1:
    # fraction pinned from the first reproduction run with seed 2026
    PINNED_FRACTION = 1.0

    def test_top_half_enrichment_and_l_penalty(self):
        base = dict(kind="scenario1", N=10000, K=500, fold=1.5,
                    replicates=200, seed=2026)
        plain = simulate(ScenarioSpec(**base))
        assert plain.fraction_significant > 0.9
        assert plain.fraction_significant == self.PINNED_FRACTION
        limited = simulate(ScenarioSpec(params=TestParams(L=2500), **base))
        assert limited.fraction_significant < plain.fraction_significant
        done("scenario 1: 1.5-fold top-half enrichment, L=2500 penalty")


class TestPerformance:
    def test_single_large_test_under_one_second(self):
        rng = np.random.default_rng(999)
        ones = rng.choice(10000, size=500, replace=False)
        v = np.zeros(10000, dtype=int)
        v[ones] = 1
        rl = RankedList(tuple(v))
        t0 = time.perf_counter()
        s = compute_statistic(rl).s
        if s < 1.0:
            pvalue_dp(s, rl.K, rl.W)
        elapsed = time.perf_counter() - t0
        assert elapsed < 1.0, f"took {elapsed:.3f}s"
        done(f"performance: N=10000 K=500 full test in {elapsed * 1000:.0f} ms")
