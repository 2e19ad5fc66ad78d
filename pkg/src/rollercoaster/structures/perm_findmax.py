"""FindMax/Update over an array of distinct values from ``1..n``.

``A[1..n]`` holds 0 or distinct values.  A successor dictionary over the
stored values finds the value ``w`` closest to the query from the required
side; the answer is then the largest position holding any value on that side
of ``w``, which is a suffix-maximum (for "above") or prefix-maximum (for
"below") query on the inverse array ``B[value] = position``.

Kernel state is a block of an ``int64`` buffer at offset ``p``: a header
``[n, above, below, value-set root, suffix block, prefix block]``, then
``A[0..n]``, the value set and the two suffix-maximum blocks.  A direction
that is never queried gets a block over zero positions and is left alone.
"""
import numpy as np
from numba import njit

from ..errors import DuplicateValue, IndexOutOfRange
from .suffix_max import smq_footprint, smq_init, smq_lower, smq_query, smq_raise, smq_relocate, smq_value
from .veb import veb_delete, veb_footprint, veb_init, veb_insert, veb_max, veb_member, veb_min, veb_predecessor, veb_successor

ABOVE = "above"
BELOW = "below"

_N, _ABOVE, _BELOW, _T, _SB, _PB = range(6)
_HEADER = 6


def pfm_footprint(n, above=True, below=True):
    return (_HEADER + n + 1 + veb_footprint(n + 1)
            + smq_footprint(n if above else 0) + smq_footprint(n if below else 0))


def pfm_init(buf, p, n, above=True, below=True):
    """Lay out an empty structure at ``buf[p:]``."""
    buf[p:p + _HEADER + n + 1] = 0
    buf[p + _N] = n
    buf[p + _ABOVE] = above
    buf[p + _BELOW] = below
    o = p + _HEADER + n + 1
    buf[p + _T] = veb_init(buf, o, n + 1)
    o += veb_footprint(n + 1)
    buf[p + _SB] = smq_init(buf, o, n if above else 0)
    o += smq_footprint(n if above else 0)
    buf[p + _PB] = smq_init(buf, o, n if below else 0)
    return p


def new_pfm(n, above=True, below=True):
    """Standalone buffer holding one structure at offset 0."""
    buf = np.empty(pfm_footprint(n, above, below), dtype=np.int64)
    pfm_init(buf, 0, n, above, below)
    return buf


@njit(cache=True)
def pfm_get(s, p, l):
    return s[p + _HEADER + l]


@njit(cache=True)
def pfm_find_above(s, p, x):
    """Largest position holding a value > x, or -1."""
    n = s[p + _N]
    if x >= n:
        return -1
    t = s[p + _T]
    w = veb_min(s, t) if x < 0 else veb_successor(s, t, x)
    if w <= 0:
        return -1
    sb = s[p + _SB]
    return smq_value(s, sb, smq_query(s, sb, w))


@njit(cache=True)
def pfm_find_below(s, p, x):
    """Largest position holding a value < x, or -1."""
    n = s[p + _N]
    if x <= 1:
        return -1
    t = s[p + _T]
    w = veb_max(s, t) if x > n else veb_predecessor(s, t, x)
    if w <= 0:
        return -1
    pb = s[p + _PB]
    return smq_value(s, pb, smq_query(s, pb, n + 1 - w))


@njit(cache=True)
def pfm_update(s, p, l, x):
    """Set ``A[l] = x``; ``x`` must be 0 or absent from ``A``."""
    n = s[p + _N]
    a = p + _HEADER
    old = s[a + l]
    if old == x:
        return
    s[a + l] = x
    t = s[p + _T]
    if old > 0:
        veb_delete(s, t, old)
    if x > 0:
        veb_insert(s, t, x)
    if s[p + _ABOVE]:
        sb = s[p + _SB]
        if old > 0 and x > old:
            smq_relocate(s, sb, old, x)
        else:
            if old > 0:
                smq_lower(s, sb, old, 0)
            if x > 0:
                smq_raise(s, sb, x, l)
    if s[p + _BELOW]:
        pb = s[p + _PB]
        po = n + 1 - old
        px = n + 1 - x
        if old > 0 and 0 < x < old:
            smq_relocate(s, pb, po, px)
        else:
            if old > 0:
                smq_lower(s, pb, po, 0)
            if x > 0:
                smq_raise(s, pb, px, l)


class PermFindMax:
    """Positions ``1..n`` holding 0 or distinct values from ``1..n``.

    >>> p = PermFindMax(4)
    >>> for l, x in enumerate([4, 1, 3, 2], start=1):
    ...     p.update(l, x)
    >>> p.find_largest(3, "below"), p.find_largest(3, "above")
    (4, 1)
    """

    def __init__(self, n: int, above: bool = True, below: bool = True):
        self.n = n
        self.above = above
        self.below = below
        self._s = new_pfm(n, above, below)

    @property
    def A(self):
        return self._s[_HEADER:_HEADER + self.n + 1]

    def _check(self, l):
        if not 1 <= l <= self.n:
            raise IndexOutOfRange(f"position {l} outside 1..{self.n}")

    def update(self, l: int, x: int) -> None:
        self._check(l)
        if not 0 <= x <= self.n:
            raise IndexOutOfRange(f"value {x} outside 0..{self.n}")
        if x and self.A[l] != x and x in self:
            raise DuplicateValue(f"value {x} is already stored")
        pfm_update(self._s, 0, l, x)

    def __contains__(self, x) -> bool:
        return 1 <= x <= self.n and bool(veb_member(self._s, int(self._s[_T]), x))

    def get(self, l: int) -> int:
        self._check(l)
        return int(self.A[l])

    def find_largest(self, x: int, rel: str):
        if rel == ABOVE:
            if not self.above:
                raise ValueError("structure built without the 'above' direction")
            l = pfm_find_above(self._s, 0, x)
        elif rel == BELOW:
            if not self.below:
                raise ValueError("structure built without the 'below' direction")
            l = pfm_find_below(self._s, 0, x)
        else:
            raise ValueError(f"rel must be {ABOVE!r} or {BELOW!r}")
        return None if l < 0 else int(l)

    def inverse(self) -> np.ndarray:
        """``B`` with ``B[v] = position of v`` (0 when absent)."""
        B = np.zeros(self.n + 1, dtype=np.int64)
        for l in range(1, self.n + 1):
            if self.A[l]:
                B[self.A[l]] = l
        return B
