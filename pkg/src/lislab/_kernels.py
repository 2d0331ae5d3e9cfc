"""Compiled inner loops for the chain computations."""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def lis_ranks(y):
    """Length of the longest strictly increasing subsequence ending at each index.

    Patience sorting with per-element rank recording. ``tails[k]`` holds the
    smallest possible last value of an increasing subsequence of length
    ``k + 1`` seen so far.
    """
    n = y.shape[0]
    tails = np.empty(n, dtype=np.float64)
    ranks = np.empty(n, dtype=np.int64)
    length = 0
    for i in range(n):
        v = y[i]
        lo = 0
        hi = length
        # leftmost pile whose top is >= v keeps the increase strict
        while lo < hi:
            mid = (lo + hi) >> 1
            if tails[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        tails[lo] = v
        ranks[i] = lo + 1
        if lo == length:
            length += 1
    return ranks


@njit(cache=True, nogil=True)
def lis_length(y):
    n = y.shape[0]
    tails = np.empty(n, dtype=np.float64)
    length = 0
    for i in range(n):
        v = y[i]
        lo = 0
        hi = length
        while lo < hi:
            mid = (lo + hi) >> 1
            if tails[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        tails[lo] = v
        if lo == length:
            length += 1
    return length
