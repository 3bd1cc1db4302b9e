"""Pure-Python/numpy implementations of the hot kernels.

These are the fallback for environments where the compiled extension is
unavailable, and the reference the compiled kernels are tested against.
Running PMF values are kept as (mantissa, base-2 exponent) pairs so the
recurrence chains survive lists long enough for a plain double to underflow.
"""

from math import frexp, ldexp

import numpy as np

BACKEND = "pure"

_RESCALE_LO = 1e-280
_RESCALE_HI = 1e280


def statistic_scan(v, K: int, X: int, L: int):
    """Minimum permitted hypergeometric tail p-value over cutoffs 1..L.

    ``v`` is indexed from 0 while cutoffs n are 1-based: element ``v[i]``
    sits at cutoff n = i + 1.  Returns (s, n_star, k_star), with (1.0, 0, 0)
    when no permitted cutoff exists.
    """
    N = len(v)
    mant, e = 1.0, 0  # PMF of the current prefix count, scaled by 2**e
    k = 0
    s, n_star, k_star = 1.0, 0, 0
    for i in range(min(N, L)):
        n = i + 1
        if v[i]:
            mant *= n * (K - k) / ((N - i) * (k + 1.0))
            k += 1
        else:
            mant *= n * (N - K - i + k) / ((N - i) * (i - k + 1.0))
        if mant != 0.0 and not _RESCALE_LO < mant < _RESCALE_HI:
            mant, e2 = frexp(mant)
            e += e2
        if not v[i] or k < X:
            continue
        if i + 1 < N and v[i + 1] and n + 1 <= L:
            # the tail at the next cutoff is strictly smaller
            continue
        if k <= (n - (N - K) if n > N - K else 0):
            # k at its minimum attainable value: the tail is exactly 1
            continue
        term, t, te = mant, mant, e
        hi = min(n, K)
        for kk in range(k, hi):
            term *= (n - kk) * (K - kk) / ((kk + 1.0) * (N - K - n + kk + 1.0))
            t += term
            if t > _RESCALE_HI:
                t, e2 = frexp(t)
                term = ldexp(term, -e2)
                te += e2
        p = ldexp(t, te)
        if p > 1.0:
            p = 1.0
        if p < s:
            s, n_star, k_star = p, n, k
    if s == 0.0:
        s = 5e-324
    return s, n_star, k_star


def region_scan(s: float, K: int, W: int, X: int, L: int):
    """Mark every configuration (k, w) whose tail p-value is <= s, within X/L.

    Each anti-diagonal n = k + w is scanned from the maximal-enrichment
    configuration k = min(n, K) downward, stopping as soon as the accumulated
    tail exceeds s or k drops below X.
    """
    N = K + W
    R = np.zeros((K + 1, W + 1), dtype=np.uint8)
    thresh = s * (1.0 + 1e-12)
    mant, e = 1.0, 0  # PMF of the strongest configuration on diagonal n
    for n in range(1, min(L, N) + 1):
        if n <= K:
            k = n
            mant *= (K - n + 1.0) / (N - n + 1.0)
        else:
            k = K
            mant *= n / float(n - K)
        if mant != 0.0 and not _RESCALE_LO < mant < _RESCALE_HI:
            mant, e2 = frexp(mant)
            e += e2
        term, t, te = mant, mant, e
        w = n - k
        while k >= X and w <= W and ldexp(t, te) <= thresh:
            R[k, w] = 1
            term *= k * (N - K - n + k) / ((n - k + 1.0) * (K - k + 1.0))
            t += term
            if t > _RESCALE_HI:
                t, e2 = frexp(t)
                term = ldexp(term, -e2)
                te += e2
            k -= 1
            w += 1
    return R


def dp_survival(R, K: int, W: int) -> float:
    """Fraction of lattice paths from (0,0) to (K,W) avoiding the marked cells.

    Fills the path table one anti-diagonal at a time; within a diagonal every
    cell depends only on the previous diagonal, so the update vectorizes.
    """
    N = K + W
    M = np.zeros((K + 1, W + 1))
    M[0, 0] = 1.0
    mask = np.asarray(R, dtype=bool)
    for n in range(1, N + 1):
        ks = np.arange(max(0, n - W), min(n, K) + 1)
        ws = n - ks
        vals = np.zeros(len(ks))
        from_w = ws > 0
        vals[from_w] = M[ks[from_w], ws[from_w] - 1] * ((W - ws[from_w] + 1.0) / (N - n + 1.0))
        from_k = ks > 0
        vals[from_k] += M[ks[from_k] - 1, ws[from_k]] * ((K - ks[from_k] + 1.0) / (N - n + 1.0))
        vals[mask[ks, ws]] = 0.0
        M[ks, ws] = vals
    return float(M[K, W])
