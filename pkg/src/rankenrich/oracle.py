"""Brute-force ground truth for small lists.

The statistic is recomputed by direct tail summation (no recurrences) and
the p-value by enumerating every distinct list with the same N and K.
Deliberately slow and simple; everything else in the package is tested
against this module.
"""

from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import SizeError
from .hypergeom import HGParams, tail_sf
from .ranked import RankedList, TestParams, as_ranked

__all__ = ["ListUniverse", "naive_statistic", "brute_pvalue"]

UNIVERSE_CAP = 10**6

REL_TOL = 1e-12  # same comparison rule as the DP engine


@lru_cache(maxsize=200_000)
def _tail(N: int, K: int, n: int, k: int) -> float:
    return tail_sf(HGParams(N, K, n, k))


class ListUniverse:
    """All C(N, K) distinct binary lists with K ones, in lexicographic order
    of the 1-positions."""

    def __init__(self, N: int, K: int):
        if not 0 <= K <= N:
            raise SizeError(f"K={K} outside [0, N={N}]")
        self.N = N
        self.K = K

    def __len__(self) -> int:
        return comb(self.N, self.K)

    def __iter__(self):
        for ones in combinations(range(self.N), self.K):
            v = [0] * self.N
            for i in ones:
                v[i] = 1
            yield tuple(v)


def naive_statistic(v, params: TestParams = TestParams()) -> float:
    """Minimum tail p-value over all permitted cutoffs, each tail summed directly."""
    rl = as_ranked(v)
    L = params.resolve_L(rl.N)
    s = 1.0
    for n in range(1, L + 1):
        k = rl.prefix[n]
        if k >= params.X:
            s = min(s, _tail(rl.N, rl.K, n, k))
    return s


def brute_pvalue(v, params: TestParams = TestParams()) -> float:
    """Fraction of the list universe scoring a statistic at least as good."""
    rl = as_ranked(v)
    if comb(rl.N, rl.K) > UNIVERSE_CAP:
        raise SizeError(
            f"universe size C({rl.N}, {rl.K}) exceeds the {UNIVERSE_CAP} cap"
        )
    s = naive_statistic(rl, params)
    cut = s * (1.0 + REL_TOL)
    universe = ListUniverse(rl.N, rl.K)
    hits = sum(1 for v0 in universe if naive_statistic(RankedList(v0), params) <= cut)
    return hits / len(universe)
