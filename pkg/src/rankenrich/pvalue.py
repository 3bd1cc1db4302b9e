"""Exact p-value by counting lattice paths that avoid the rejection region.

A configuration (k, w) stands for k ones and w zeros above the implied
cutoff n = k + w.  The rejection region holds every configuration whose
tail p-value is at least as good as the observed statistic, restricted to
k >= X and n <= L.  Each list corresponds to a monotone lattice path from
(0, 0) to (K, W); the p-value is the fraction of paths touching the region.
"""

from . import backend
from .errors import DomainError
from .ranked import TestParams

__all__ = ["build_region", "path_survival", "pvalue_dp", "lipson_bound"]

# The statistic and the region scan come from different recurrence chains;
# exact <= could drop the achieving configuration through rounding.
REL_TOL = 1e-12


def build_region(s: float, K: int, W: int, params: TestParams = TestParams()):
    """(K+1) x (W+1) mask of configurations in the rejection region.  O(KW)."""
    if not 0.0 < s < 1.0:
        raise DomainError(f"statistic s={s} outside (0, 1)")
    if K < 0 or W < 0:
        raise DomainError("K and W must be >= 0")
    L = params.resolve_L(K + W)
    return backend.region_scan(s, K, W, params.X, L)


def path_survival(region, K: int, W: int) -> float:
    """Fraction of equally-likely lists whose path avoids every marked cell."""
    return backend.dp_survival(region, K, W)


def pvalue_dp(s: float, K: int, W: int, params: TestParams = TestParams()) -> float:
    """Exact probability that a random list scores a statistic <= s.  O(KW)."""
    if s <= 0.0:
        raise DomainError(f"statistic s={s} must be positive")
    if s >= 1.0:
        return 1.0
    region = build_region(s, K, W, params)
    p = 1.0 - path_survival(region, K, W)
    return min(max(p, 0.0), 1.0)


def lipson_bound(s: float, K: int) -> float:
    """Closed-form upper bound on the exact p-value: min(1, K * s)."""
    if not 0.0 < s <= 1.0:
        raise DomainError(f"statistic s={s} outside (0, 1]")
    if K < 0:
        raise DomainError("K must be >= 0")
    return min(1.0, K * s)
