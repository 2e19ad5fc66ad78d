"""Suffix-maximum queries over an array of distinct positive values.

``B[1..n]`` holds 0 (empty) or distinct positive values.  The records are
the positions ``i`` with ``B[i] > 0`` and ``B[i]`` larger than everything to
their right; they are kept in a successor dictionary, so the position of the
maximum of ``B[l..n]`` is the smallest record ``>= l``.  Raising a cell walks
left deleting the records it now dominates.  Lowering a record rescans the
gap back to the previous record, which is cheap only when the workload rarely
lowers records; the longest-rollercoaster search never does (it only uses
``relocate`` towards larger positions).

Prefix queries reuse the same kernels on mirrored positions ``n + 1 - i``.

Kernel state is a block of an ``int64`` buffer starting at offset ``o``:
a header ``[n, root of the record set, inserts, deletes]``, then ``B[0..n]``,
then the record set.
"""
import numpy as np
from numba import njit

from ..errors import AllEmpty, DuplicateValue, IndexOutOfRange
from .veb import veb_ceiling, veb_delete, veb_footprint, veb_init, veb_insert, veb_member, veb_predecessor, veb_successor

_N, _ROOT, _INSERTS, _DELETES = range(4)
_HEADER = 4


def smq_footprint(n):
    return _HEADER + n + 1 + veb_footprint(n + 1)


def smq_init(buf, o, n):
    """Lay out an empty structure over positions ``1..n`` at ``buf[o:]``."""
    buf[o:o + _HEADER + n + 1] = 0
    buf[o + _N] = n
    buf[o + _ROOT] = veb_init(buf, o + _HEADER + n + 1, n + 1)
    return o


@njit(cache=True)
def smq_value(s, o, l):
    return s[o + _HEADER + l]


@njit(cache=True)
def smq_query(s, o, l):
    """Smallest record >= l, or -1 when ``B[l..n]`` is all zero."""
    return veb_ceiling(s, s[o + _ROOT], l)


@njit(cache=True)
def smq_raise(s, o, l, x):
    """Set ``B[l] = x`` where ``x`` exceeds the current ``B[l]``."""
    b = o + _HEADER
    t = s[o + _ROOT]
    s[b + l] = x
    nxt = veb_successor(s, t, l)
    if nxt >= 0 and s[b + nxt] > x:
        return
    if not veb_member(s, t, l):
        veb_insert(s, t, l)
        s[o + _INSERTS] += 1
    p = veb_predecessor(s, t, l)
    while p >= 0 and s[b + p] < x:
        veb_delete(s, t, p)
        s[o + _DELETES] += 1
        p = veb_predecessor(s, t, p)


@njit(cache=True)
def _rescan(s, o, lo, hi):
    # rebuild the records in (lo, hi], all of which are currently absent
    b = o + _HEADER
    t = s[o + _ROOT]
    nxt = veb_successor(s, t, hi)
    best = s[b + nxt] if nxt >= 0 else 0
    i = hi
    while i > lo:
        if s[b + i] > best:
            veb_insert(s, t, i)
            s[o + _INSERTS] += 1
            best = s[b + i]
        i -= 1


@njit(cache=True)
def smq_lower(s, o, l, x):
    """Set ``B[l] = x`` where ``0 <= x`` is below the current ``B[l]``."""
    t = s[o + _ROOT]
    s[o + _HEADER + l] = x
    if not veb_member(s, t, l):
        return
    veb_delete(s, t, l)
    s[o + _DELETES] += 1
    prev = veb_predecessor(s, t, l)
    _rescan(s, o, max(prev, 0), l)


@njit(cache=True)
def smq_set(s, o, l, x):
    cur = s[o + _HEADER + l]
    if x > cur:
        smq_raise(s, o, l, x)
    elif x < cur:
        smq_lower(s, o, l, x)


@njit(cache=True)
def smq_relocate(s, o, src, dst):
    """Move the value at ``src`` to the empty cell ``dst > src``.

    When ``src`` was a record its value dominated the whole gap back to the
    previous record, and ``dst`` inherits that role, so no rescan is needed.
    """
    b = o + _HEADER
    t = s[o + _ROOT]
    x = s[b + src]
    s[b + src] = 0
    if veb_member(s, t, src):
        veb_delete(s, t, src)
        s[o + _DELETES] += 1
    smq_raise(s, o, dst, x)


def new_smq(n):
    """Standalone buffer for positions ``1..n`` (structure at offset 0)."""
    buf = np.empty(smq_footprint(n), dtype=np.int64)
    smq_init(buf, 0, n)
    return buf


class SuffixMaxStructure:
    """``query(l)`` returns the position of the largest value in ``B[l..n]``;
    with ``prefix=True`` it answers over ``B[1..l]`` instead."""

    def __init__(self, n: int, prefix: bool = False):
        self.n = n
        self.prefix = prefix
        self._s = new_smq(n)
        self._where = {}

    def _pos(self, l):
        if not 1 <= l <= self.n:
            raise IndexOutOfRange(f"position {l} outside 1..{self.n}")
        return self.n + 1 - l if self.prefix else l

    def __getitem__(self, l):
        return int(smq_value(self._s, 0, self._pos(l)))

    def update(self, l: int, x: int) -> None:
        if x < 0:
            raise ValueError("values must be non-negative")
        p = self._pos(l)
        if x and self._where.get(x, l) != l:
            raise DuplicateValue(f"value {x} is already stored at {self._where[x]}")
        old = int(smq_value(self._s, 0, p))
        if old:
            del self._where[old]
        if x:
            self._where[x] = l
        smq_set(self._s, 0, p, x)

    def relocate(self, src: int, dst: int) -> None:
        """Move a value to an empty cell; cheap when ``dst`` lies past ``src``
        in query direction."""
        ps, pd = self._pos(src), self._pos(dst)
        x = int(smq_value(self._s, 0, ps))
        if not x or smq_value(self._s, 0, pd):
            raise ValueError("relocate needs a full source and an empty target")
        self._where[x] = dst
        if pd > ps:
            smq_relocate(self._s, 0, ps, pd)
        else:
            smq_lower(self._s, 0, ps, 0)
            smq_raise(self._s, 0, pd, x)

    def query(self, l: int) -> int:
        r = smq_query(self._s, 0, self._pos(l))
        if r < 0:
            raise AllEmpty("no non-zero value in the queried range")
        return self.n + 1 - int(r) if self.prefix else int(r)

    def records(self) -> list:
        """Record positions in query order (values strictly decreasing)."""
        t = int(self._s[_ROOT])
        out = []
        r = veb_ceiling(self._s, t, 1)
        while r >= 0:
            out.append(self.n + 1 - int(r) if self.prefix else int(r))
            r = veb_successor(self._s, t, r)
        return out

    @property
    def inserts(self) -> int:
        return int(self._s[_INSERTS])

    @property
    def deletes(self) -> int:
        return int(self._s[_DELETES])
