"""Complete binary tree over cells ``1..n`` keeping per-subtree min, max and
occupancy, so both "largest index below x" and "largest index above x"
descend in O(log n) under arbitrary rewrites.

Kernel state is a block of an ``int64`` buffer at offset ``o``: three
heap-ordered arrays (occupancy, min, max) of ``2 * size`` cells each.
"""
import numpy as np
from numba import njit

from ..errors import IndexOutOfRange

BELOW = "below"
ABOVE = "above"


def tree_size(n):
    size = 1
    while size < n + 1:
        size <<= 1
    return size


def ast_footprint(n):
    return 6 * tree_size(n)


@njit(cache=True)
def _pull(s, cnt, mn, mx, p):
    a = 2 * p
    b = a + 1
    ca = s[cnt + a]
    cb = s[cnt + b]
    s[cnt + p] = ca + cb
    if ca == 0:
        s[mn + p] = s[mn + b]
        s[mx + p] = s[mx + b]
    elif cb == 0:
        s[mn + p] = s[mn + a]
        s[mx + p] = s[mx + a]
    else:
        s[mn + p] = min(s[mn + a], s[mn + b])
        s[mx + p] = max(s[mx + a], s[mx + b])


@njit(cache=True)
def ast_set(s, o, size, l, x):
    cnt, mn, mx = o, o + 2 * size, o + 4 * size
    p = size + l
    s[cnt + p] = 1
    s[mn + p] = x
    s[mx + p] = x
    p >>= 1
    while p >= 1:
        _pull(s, cnt, mn, mx, p)
        p >>= 1


@njit(cache=True)
def ast_clear(s, o, size, l):
    cnt, mn, mx = o, o + 2 * size, o + 4 * size
    p = size + l
    s[cnt + p] = 0
    p >>= 1
    while p >= 1:
        _pull(s, cnt, mn, mx, p)
        p >>= 1


@njit(cache=True)
def ast_get(s, o, size, l):
    """``(occupied, value)`` of cell ``l``."""
    p = size + l
    return s[o + p] != 0, s[o + 2 * size + p]


@njit(cache=True)
def ast_find_below(s, o, size, x):
    """Largest cell index holding a value < x, or -1."""
    cnt, mn = o, o + 2 * size
    if s[cnt + 1] == 0 or s[mn + 1] >= x:
        return -1
    p = 1
    while p < size:
        r = 2 * p + 1
        if s[cnt + r] > 0 and s[mn + r] < x:
            p = r
        else:
            p = r - 1
    return p - size


@njit(cache=True)
def ast_find_above(s, o, size, x):
    """Largest cell index holding a value > x, or -1."""
    cnt, mx = o, o + 4 * size
    if s[cnt + 1] == 0 or s[mx + 1] <= x:
        return -1
    p = 1
    while p < size:
        r = 2 * p + 1
        if s[cnt + r] > 0 and s[mx + r] > x:
            p = r
        else:
            p = r - 1
    return p - size


class AggregateSearchTree:
    """Cells ``1..n``, each empty or holding an integer.

    >>> t = AggregateSearchTree(4)
    >>> for l, x in enumerate([5, 1, 7, 3], start=1):
    ...     t.update(l, x)
    >>> t.find_largest(4, "below"), t.find_largest(6, "above")
    (4, 3)
    """

    def __init__(self, n: int):
        self.n = n
        self.size = tree_size(n)
        self._s = np.zeros(ast_footprint(n), dtype=np.int64)

    def _check(self, l):
        if not 1 <= l <= self.n:
            raise IndexOutOfRange(f"cell {l} outside 1..{self.n}")

    def update(self, l: int, x: int) -> None:
        self._check(l)
        ast_set(self._s, 0, self.size, l, x)

    def clear(self, l: int) -> None:
        self._check(l)
        ast_clear(self._s, 0, self.size, l)

    def get(self, l: int):
        self._check(l)
        full, value = ast_get(self._s, 0, self.size, l)
        return int(value) if full else None

    def find_largest(self, x: int, rel: str):
        if rel == BELOW:
            l = ast_find_below(self._s, 0, self.size, x)
        elif rel == ABOVE:
            l = ast_find_above(self._s, 0, self.size, x)
        else:
            raise ValueError(f"rel must be {BELOW!r} or {ABOVE!r}")
        return None if l < 0 else int(l)

    def cells(self) -> list:
        return [self.get(l) for l in range(1, self.n + 1)]
