"""Test statistic: the minimum hypergeometric tail p-value over permitted cutoffs.

The math is 1-based (cutoff n covers elements 1..n) while the stored vector
is 0-based: ``v[i]`` is the element at cutoff n = i + 1.  The scan itself
lives in the backend kernels; this module provides the plain-double
recurrence passes used for reporting and the public entry point.
"""

from dataclasses import dataclass

from . import backend
from .errors import DomainError
from .ranked import RankedList, TestParams

__all__ = ["StatResult", "pmf_along_list", "hgp_from_pmf", "cutoff_pvalues", "compute_statistic"]


@dataclass(frozen=True)
class StatResult:
    """Statistic s in (0, 1], the cutoff achieving it, and the count there.

    ``n_star`` is 0 when s == 1.0 (no permitted cutoff improved on 1).
    ``hg_pvalues[n-1]`` is the per-cutoff tail p-value, present on request.
    """

    s: float
    n_star: int
    k_star: int
    hg_pvalues: tuple | None = None


def pmf_along_list(rl: RankedList) -> list:
    """PMF of the observed prefix count at every cutoff, in one O(N) pass.

    F[n] = f(k_(n); N, K, n); a 0-element advances n at fixed k, a 1-element
    advances both.
    """
    N, K = rl.N, rl.K
    F = [1.0] * (N + 1)
    k = 0
    for i in range(N):
        if rl.v[i]:
            F[i + 1] = F[i] * (i + 1) * (K - k) / ((N - i) * (k + 1.0))
            k += 1
        else:
            F[i + 1] = F[i] * (i + 1) * (N - K - i + k) / ((N - i) * (i - k + 1.0))
    return F


def hgp_from_pmf(f: float, k: int, N: int, K: int, n: int) -> float:
    """Tail p-value from the PMF at (k, n), by stepping k upward.  O(K)."""
    if not 0 <= k <= min(n, K):
        raise DomainError(f"k={k} outside [0, min(n={n}, K={K})]")
    p = f
    hi = min(n, K)
    while k < hi:
        f = f * (n - k) * (K - k) / ((k + 1.0) * (N - K - n + k + 1.0))
        p += f
        k += 1
    return min(p, 1.0)


def cutoff_pvalues(rl: RankedList) -> list:
    """Tail p-value at every cutoff n = 1..N (index n-1).  O(KN)."""
    F = pmf_along_list(rl)
    return [
        hgp_from_pmf(F[n], rl.prefix[n], rl.N, rl.K, n)
        for n in range(1, rl.N + 1)
    ]


def compute_statistic(rl: RankedList, params: TestParams = TestParams(),
                      with_pvalues: bool = False) -> StatResult:
    """XL-mHG test statistic: min tail p-value over cutoffs n <= L with k_(n) >= X.

    The minimum can only occur where v_n = 1, so only those cutoffs are
    evaluated.  Degenerate parameter choices (X > K, L = 0) yield s = 1.0.
    Ties are broken toward the smallest cutoff.
    """
    L = params.resolve_L(rl.N)
    s, n_star, k_star = backend.statistic_scan(rl.v, rl.K, params.X, L)
    pvals = tuple(cutoff_pvalues(rl)) if with_pvalues else None
    return StatResult(s=s, n_star=n_star, k_star=k_star, hg_pvalues=pvals)
