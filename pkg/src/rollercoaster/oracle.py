"""Slow, independent ground truth for the search and counting modules.

Nothing here shares code with the fast paths: the exhaustive search and the
permutation count use their own run checker, and the quadratic DP works
directly from the definition of the last-run state.
"""
from __future__ import annotations

import numpy as np
from numba import njit

from .core import Rollercoaster, keys_of
from .errors import TooLarge

EXHAUSTIVE_LIMIT = 20
COUNT_LIMIT = 10


@njit(cache=True)
def _runs_ok(vals, m, min_run):
    # every maximal monotone run of vals[:m] has >= min_run elements
    if m < min_run:
        return False
    steps = 1
    up = vals[1] > vals[0]
    for t in range(2, m):
        now = vals[t] > vals[t - 1]
        if now == up:
            steps += 1
        else:
            if steps + 1 < min_run:
                return False
            up = now
            steps = 1
    return steps + 1 >= min_run


@njit(cache=True)
def _exhaustive(v):
    n = len(v)
    buf = np.empty(n, dtype=v.dtype)
    best = 0
    for mask in range(1 << n):
        m = 0
        for t in range(n):
            if (mask >> t) & 1:
                buf[m] = v[t]
                m += 1
        if m > best and _runs_ok(buf, m, 3):
            best = m
    return best


def longest_exhaustive(seq) -> int:
    """Longest rollercoaster length by trying every subsequence; 0 if none."""
    v = np.asarray(keys_of(seq), dtype=np.int64)
    if len(v) > EXHAUSTIVE_LIMIT:
        raise TooLarge(f"exhaustive search is limited to n <= {EXHAUSTIVE_LIMIT}")
    return int(_exhaustive(v))


# last-run states of a partial rollercoaster ending at some element
LONE, ASC2, ASC3, DESC2, DESC3 = range(5)


def longest_quadratic_dp(seq) -> Rollercoaster | None:
    """Exact longest rollercoaster by an O(n^2) DP over (end, last-run state)."""
    v = np.asarray(keys_of(seq), dtype=np.int64)
    n = len(v)
    if n < 3:
        return None
    NEG = -(1 << 40)
    best = np.full((n, 5), NEG, dtype=np.int64)
    parent = np.full((n, 5, 2), -1, dtype=np.int64)
    best[:, LONE] = 1
    # (target state, source state, needs v[i] < v[j])
    moves = (
        (ASC2, LONE, True), (ASC2, DESC3, True),
        (ASC3, ASC2, True), (ASC3, ASC3, True),
        (DESC2, LONE, False), (DESC2, ASC3, False),
        (DESC3, DESC2, False), (DESC3, DESC3, False),
    )
    for j in range(1, n):
        below = v[:j] < v[j]
        for target, source, up in moves:
            ok = below if up else ~below
            cand = np.where(ok, best[:j, source], NEG)
            i = int(np.argmax(cand))
            if cand[i] > 0 and cand[i] + 1 > best[j, target]:
                best[j, target] = cand[i] + 1
                parent[j, target] = (i, source)
    ends = best[:, [ASC3, DESC3]]
    flat = int(np.argmax(ends))
    j, which = divmod(flat, 2)
    length = int(ends[j, which])
    if length < 3:
        return None
    state = (ASC3, DESC3)[which]
    out = []
    while j >= 0:
        out.append(j)
        j, state = (int(x) for x in parent[j, state])
    return Rollercoaster(out[::-1])


@njit(cache=True)
def _count_heap(n):
    # Heap's algorithm over all n! orders
    a = np.arange(n, dtype=np.int64)
    c = np.zeros(n, dtype=np.int64)
    total = 1 if _runs_ok(a, n, 3) else 0
    i = 1
    while i < n:
        if c[i] < i:
            if i % 2 == 0:
                a[0], a[i] = a[i], a[0]
            else:
                a[c[i]], a[i] = a[i], a[c[i]]
            if _runs_ok(a, n, 3):
                total += 1
            c[i] += 1
            i = 1
        else:
            c[i] = 0
            i += 1
    return total


def count_bruteforce(n: int) -> int:
    """Rollercoaster permutations of length n by enumeration; r(1) = 1 by convention."""
    if n > COUNT_LIMIT:
        raise TooLarge(f"enumeration is limited to n <= {COUNT_LIMIT}")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    return int(_count_heap(n))
