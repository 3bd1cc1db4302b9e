"""Selects the compiled kernels when available, the pure fallback otherwise.

Set ``RANKENRICH_PURE=1`` to force the pure backend (used by the tests and
the backend benchmark).
"""

import os

import numpy as np

from . import _pure

if os.environ.get("RANKENRICH_PURE", "").lower() in ("1", "true", "yes"):
    _impl = _pure
else:
    try:
        from . import _speed as _impl
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND


def as_int8(v) -> np.ndarray:
    return np.ascontiguousarray(v, dtype=np.int8)


def statistic_scan(v, K: int, X: int, L: int, impl=None):
    impl = impl or _impl
    return impl.statistic_scan(as_int8(v), K, X, L)


def region_scan(s: float, K: int, W: int, X: int, L: int, impl=None):
    impl = impl or _impl
    return impl.region_scan(s, K, W, X, L)


def dp_survival(R, K: int, W: int, impl=None) -> float:
    impl = impl or _impl
    return impl.dp_survival(R, K, W)
