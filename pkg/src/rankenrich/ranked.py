"""Ranked binary lists and the X/L test parameters."""

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError, InputError

__all__ = ["RankedList", "TestParams"]


@dataclass(frozen=True)
class RankedList:
    """A ranked 0/1 list with cached counts and prefix sums.

    ``prefix[n]`` is the number of 1's among the first n elements
    (1-based cutoffs; ``prefix[0] == 0``).
    """

    v: tuple
    N: int = field(init=False)
    K: int = field(init=False)
    W: int = field(init=False)
    prefix: tuple = field(init=False)

    def __post_init__(self):
        if not self.v:
            raise InputError("empty list")
        if any(x not in (0, 1) for x in self.v):
            raise InputError("list entries must be 0 or 1")
        acc = [0]
        for x in self.v:
            acc.append(acc[-1] + x)
        object.__setattr__(self, "N", len(self.v))
        object.__setattr__(self, "K", acc[-1])
        object.__setattr__(self, "W", len(self.v) - acc[-1])
        object.__setattr__(self, "prefix", tuple(acc))

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "RankedList":
        return cls(tuple(int(x) for x in values))

    def inverted(self) -> "RankedList":
        """The list reversed, for testing enrichment at the bottom."""
        return RankedList(tuple(reversed(self.v)))


@dataclass(frozen=True)
class TestParams:
    """X: minimum number of 1's above a tested cutoff; L: lowest tested cutoff."""

    __test__ = False  # not a pytest class despite the name

    X: int = 0
    L: int | None = None

    def __post_init__(self):
        if self.X < 0:
            raise DomainError(f"X={self.X} must be >= 0")
        if self.L is not None and self.L < 0:
            raise DomainError(f"L={self.L} must be >= 0")

    def resolve_L(self, N: int) -> int:
        """L defaults to N (plain mHG) when unspecified."""
        L = N if self.L is None else self.L
        if L > N:
            raise DomainError(f"L={L} exceeds list length N={N}")
        return L


def as_ranked(values: Sequence[int] | RankedList) -> RankedList:
    if isinstance(values, RankedList):
        return values
    return RankedList.from_iterable(values)
