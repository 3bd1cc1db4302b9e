import numpy as np
import pytest

from rankenrich import RankedList

# worked example used throughout: N=20, K=5
V_EX = (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0)


@pytest.fixture
def v_ex():
    return RankedList(V_EX)


def random_list(rng: np.random.Generator, N: int, K: int | None = None) -> RankedList:
    if K is None:
        K = int(rng.integers(0, N + 1))
    v = np.zeros(N, dtype=np.int8)
    if K:
        v[rng.choice(N, size=K, replace=False)] = 1
    return RankedList(tuple(int(x) for x in v))
