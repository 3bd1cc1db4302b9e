# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (see _pure.py for the reference)."""

from libc.math cimport frexp, ldexp

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"

cdef double RESCALE_LO = 1e-280
cdef double RESCALE_HI = 1e280


def statistic_scan(const signed char[::1] v, int K, int X, int L):
    cdef int N = v.shape[0]
    cdef double mant = 1.0, s = 1.0, term, t, p
    cdef int e = 0, te, e2, k = 0, n_star = 0, k_star = 0
    cdef int i, n, kk, hi, stop

    stop = N if L > N else L
    for i in range(stop):
        n = i + 1
        if v[i]:
            mant *= n * (K - k) / ((N - i) * (k + 1.0))
            k += 1
        else:
            mant *= n * (N - K - i + k) / ((N - i) * (i - k + 1.0))
        if mant != 0.0 and not (RESCALE_LO < mant < RESCALE_HI):
            mant = frexp(mant, &e2)
            e += e2
        if (not v[i]) or k < X:
            continue
        if i + 1 < N and v[i + 1] and n + 1 <= L:
            continue
        if k <= (n - (N - K) if n > N - K else 0):
            # tail is exactly 1 when k is at its minimum attainable value
            continue
        term = mant
        t = mant
        te = e
        hi = n if n < K else K
        for kk in range(k, hi):
            term *= (n - kk) * (K - kk) / ((kk + 1.0) * (N - K - n + kk + 1.0))
            t += term
            if t > RESCALE_HI:
                t = frexp(t, &e2)
                term = ldexp(term, -e2)
                te += e2
        p = ldexp(t, te)
        if p > 1.0:
            p = 1.0
        if p < s:
            s = p
            n_star = n
            k_star = k
    if s == 0.0:
        s = 5e-324
    return s, n_star, k_star


def region_scan(double s, int K, int W, int X, int L):
    cdef int N = K + W
    R_arr = np.zeros((K + 1, W + 1), dtype=np.uint8)
    cdef unsigned char[:, ::1] R = R_arr
    cdef double thresh = s * (1.0 + 1e-12)
    cdef double mant = 1.0, term, t
    cdef int e = 0, te, e2
    cdef int n, k, w, stop

    stop = N if L > N else L
    for n in range(1, stop + 1):
        if n <= K:
            k = n
            mant *= (K - n + 1.0) / (N - n + 1.0)
        else:
            k = K
            mant *= n / <double>(n - K)
        if mant != 0.0 and not (RESCALE_LO < mant < RESCALE_HI):
            mant = frexp(mant, &e2)
            e += e2
        term = mant
        t = mant
        te = e
        w = n - k
        while k >= X and w <= W and ldexp(t, te) <= thresh:
            R[k, w] = 1
            term *= k * (N - K - n + k) / ((n - k + 1.0) * (K - k + 1.0))
            t += term
            if t > RESCALE_HI:
                t = frexp(t, &e2)
                term = ldexp(term, -e2)
                te += e2
            k -= 1
            w += 1
    return R_arr


def dp_survival(R_in, int K, int W):
    cdef unsigned char[:, ::1] R = np.ascontiguousarray(R_in, dtype=np.uint8)
    cdef int N = K + W
    M_arr = np.zeros((K + 1, W + 1))
    cdef double[:, ::1] M = M_arr
    cdef int n, k, w
    cdef double denom

    M[0, 0] = 1.0
    for n in range(1, N + 1):
        denom = N - n + 1.0
        k = n if n < K else K
        w = n - k
        while k >= 0 and w <= W:
            if R[k, w]:
                M[k, w] = 0.0
            elif w > 0 and k > 0:
                M[k, w] = M[k, w - 1] * ((W - w + 1.0) / denom) + \
                    M[k - 1, w] * ((K - k + 1.0) / denom)
            elif w > 0:
                M[k, w] = M[k, w - 1] * ((W - w + 1.0) / denom)
            elif k > 0:
                M[k, w] = M[k - 1, w] * ((K - k + 1.0) / denom)
            w += 1
            k -= 1
    return M_arr[K, W]
