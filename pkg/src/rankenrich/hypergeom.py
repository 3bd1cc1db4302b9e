"""Hypergeometric PMF, upper tail, and the six single-step recurrences.

The direct evaluator works in log-space (via ``lgamma``) so that large
population sizes do not overflow intermediate binomial coefficients.  The
step functions operate in linear space, exactly as the scan algorithms that
consume them do; each one multiplies an input PMF value by an exact rational
factor to move one step on the (k, n) grid.
"""

import warnings
from dataclasses import dataclass
from math import exp, lgamma

from .errors import DomainError, UnderflowWarning

__all__ = [
    "HGParams",
    "pmf_direct",
    "tail_sf",
    "step_inc_k",
    "step_inc_n",
    "step_inc_kn",
    "step_diag",
    "step_k_eq_K",
    "step_dec_k",
]


@dataclass(frozen=True)
class HGParams:
    """A point (N, K, n, k) in the legal hypergeometric parameter region."""

    N: int
    K: int
    n: int
    k: int

    def __post_init__(self):
        if not 0 <= self.K <= self.N:
            raise DomainError(f"K={self.K} outside [0, N={self.N}]")
        if not 0 <= self.n <= self.N:
            raise DomainError(f"n={self.n} outside [0, N={self.N}]")
        lo = max(0, self.n - (self.N - self.K))
        hi = min(self.n, self.K)
        if not lo <= self.k <= hi:
            raise DomainError(f"k={self.k} outside [{lo}, {hi}] for {self}")

    @property
    def W(self) -> int:
        return self.N - self.K


def _log_choose(a: int, b: int) -> float:
    return lgamma(a + 1) - lgamma(b + 1) - lgamma(a - b + 1)


def pmf_direct(p: HGParams) -> float:
    """Probability of exactly k ones in a size-n sample: C(K,k)C(N-K,n-k)/C(N,n)."""
    return exp(
        _log_choose(p.K, p.k)
        + _log_choose(p.N - p.K, p.n - p.k)
        - _log_choose(p.N, p.n)
    )


def tail_sf(p: HGParams) -> float:
    """Probability of observing k or more ones in a size-n sample.

    Sums smallest terms first (from i = min(n, K) downward) to limit
    cancellation.  Returns exactly 1.0 when k is at (or below) the minimum
    attainable count.
    """
    if p.k <= max(0, p.n - (p.N - p.K)):
        return 1.0
    total = 0.0
    for i in range(min(p.n, p.K), p.k - 1, -1):
        total += pmf_direct(HGParams(p.N, p.K, p.n, i))
    return min(total, 1.0)


def _check_input(f: float) -> None:
    if f == 0.0:
        warnings.warn(
            "recurrence step applied to an exactly-zero PMF value",
            UnderflowWarning,
            stacklevel=3,
        )


def step_inc_k(f: float, p: HGParams) -> float:
    """From the PMF at (k, n), the PMF at (k+1, n)."""
    if p.k + 1 > min(p.n, p.K):
        raise DomainError(f"k+1={p.k + 1} exceeds min(n, K)={min(p.n, p.K)}")
    _check_input(f)
    return f * (p.n - p.k) * (p.K - p.k) / ((p.k + 1) * (p.N - p.K - p.n + p.k + 1))


def step_inc_n(f: float, p: HGParams) -> float:
    """From the PMF at (k, n), the PMF at (k, n+1)."""
    if p.n + 1 > p.N or p.k < p.n + 1 - (p.N - p.K):
        raise DomainError(f"(k={p.k}, n+1={p.n + 1}) is not a legal configuration")
    _check_input(f)
    return f * (p.n + 1) * (p.N - p.K - p.n + p.k) / ((p.N - p.n) * (p.n - p.k + 1))


def step_inc_kn(f: float, p: HGParams) -> float:
    """From the PMF at (k, n), the PMF at (k+1, n+1)."""
    if p.k + 1 > p.K or p.n + 1 > p.N:
        raise DomainError(f"(k+1={p.k + 1}, n+1={p.n + 1}) is not a legal configuration")
    _check_input(f)
    return f * (p.n + 1) * (p.K - p.k) / ((p.N - p.n) * (p.k + 1))


def step_diag(f: float, p: HGParams) -> float:
    """From the PMF at (n, n), the PMF at (n+1, n+1).  Requires n+1 <= K."""
    if p.k != p.n:
        raise DomainError(f"diagonal step requires k == n, got k={p.k}, n={p.n}")
    if p.n + 1 > p.K:
        raise DomainError(f"diagonal step requires n+1 <= K, got n+1={p.n + 1}, K={p.K}")
    _check_input(f)
    return f * (p.K - p.n) / (p.N - p.n)


def step_k_eq_K(f: float, p: HGParams) -> float:
    """From the PMF at (K, n), the PMF at (K, n+1).  Requires n >= K."""
    if p.k != p.K:
        raise DomainError(f"step requires k == K, got k={p.k}, K={p.K}")
    if p.n + 1 > p.N or p.n + 1 <= p.K:
        raise DomainError(f"(K, n+1={p.n + 1}) is not reachable by this step")
    _check_input(f)
    return f * (p.n + 1) / (p.n + 1 - p.K)


def step_dec_k(f: float, p: HGParams) -> float:
    """From the PMF at (k, n), the PMF at (k-1, n)."""
    if p.k - 1 < max(0, p.n - (p.N - p.K)):
        raise DomainError(f"k-1={p.k - 1} leaves the legal region at n={p.n}")
    _check_input(f)
    return f * p.k * (p.N - p.K - p.n + p.k) / ((p.n - p.k + 1) * (p.K - p.k + 1))
