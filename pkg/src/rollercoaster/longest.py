"""Exact longest rollercoaster by a six-array race table.

A *partial* rollercoaster has every run but the last of length >= 3.  Its
class is the direction of the last run and whether that run has two
elements or at least three; a lone element counts as a two-element class of
length 1 in both directions.  For each class and length ``l`` the table keeps
the extremal last value over elements whose longest partial rollercoaster of
that class has length exactly ``l``:

=========  ==================  ========  ==================
array      class               keeps     queried
=========  ==================  ========  ==================
INC2       inc, 2 elements     smallest  largest l below x
INC3S      inc, >= 3           smallest  largest l below x
INC3L      inc, >= 3           largest   largest l above x
DEC2       dec, 2 elements     largest   largest l above x
DEC3L      dec, >= 3           largest   largest l above x
DEC3S      dec, >= 3           smallest  largest l below x
=========  ==================  ========  ==================

A new value ``x`` extends, for each class, the longest partial rollercoaster
it can legally follow; e.g. an increasing two-element tail follows either a
lone smaller element or a decreasing >= 3 tail ending below ``x``.  Only
>= 3 classes count toward the answer.  Each element stores a back pointer
per class, which replays the witness.

The general path stores each array in an ``AggregateSearchTree``; the
permutation path uses ``PermFindMax`` with only the query direction each
array needs, and writes always move values in that structure's cheap
direction.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import Rollercoaster, keys_of
from .errors import DuplicateValue, NotAPermutation
from .structures.aggregate import ast_find_above, ast_find_below, ast_footprint, ast_get, ast_set, tree_size
from .structures.perm_findmax import pfm_find_above, pfm_find_below, pfm_footprint, pfm_get, pfm_init, pfm_update

INC2, INC3S, INC3L, DEC2, DEC3L, DEC3S = range(6)
ARRAY_NAMES = ("inc,2", "inc,3+", "inc,3+'", "dec,2", "dec,3+", "dec,3+'")
# arrays that keep the smallest value (and are queried "below")
KEEPS_SMALLEST = (True, True, False, False, False, True)

# classes used by back pointers
C_INC2, C_INC3, C_DEC2, C_DEC3, C_LONE = range(5)
CLASS_NAMES = ("inc2", "inc3", "dec2", "dec3", "lone")
_CLASS_OF_ARRAY = (C_INC2, C_INC3, C_INC3, C_DEC2, C_DEC3, C_DEC3)


# Both backends keep the six arrays in one int64 buffer; cells 0..5 hold the
# offset of each array's block.

# --- backend: aggregate trees ---------------------------------------------

_SIZE = 6


def _ast_new(n):
    size = tree_size(n)
    head = 8
    buf = np.zeros(head + 6 * ast_footprint(n), dtype=np.int64)
    for a in range(6):
        buf[a] = head + a * ast_footprint(n)
    buf[_SIZE] = size
    return buf


@njit(cache=True)
def _ast_find(s, a, x, below):
    if below:
        return ast_find_below(s, s[a], s[_SIZE], x)
    return ast_find_above(s, s[a], s[_SIZE], x)


@njit(cache=True)
def _ast_get(s, a, l):
    return ast_get(s, s[a], s[_SIZE], l)


@njit(cache=True)
def _ast_put(s, a, l, x):
    ast_set(s, s[a], s[_SIZE], l, x)


# --- backend: permutation structures ---------------------------------------

def _pfm_new(n):
    sizes = [pfm_footprint(n, not small, small) for small in KEEPS_SMALLEST]
    buf = np.empty(8 + sum(sizes), dtype=np.int64)
    o = 8
    for a, small in enumerate(KEEPS_SMALLEST):
        buf[a] = pfm_init(buf, o, n, not small, small)
        o += sizes[a]
    return buf


@njit(cache=True)
def _pfm_find(s, a, x, below):
    if below:
        return pfm_find_below(s, s[a], x)
    return pfm_find_above(s, s[a], x)


@njit(cache=True)
def _pfm_get(s, a, l):
    v = pfm_get(s, s[a], l)
    return v != 0, v


@njit(cache=True)
def _pfm_put(s, a, l, x):
    pfm_update(s, s[a], l, x)


# --- the race itself -------------------------------------------------------

def _make_kernels(find, get, put):
    @njit
    def write(st, owner, hist, nhist, a, l, x, i, pred, smallest):
        full, cur = get(st, a, l)
        if full and (x >= cur if smallest else x <= cur):
            return nhist
        put(st, a, l, x)
        owner[a, l] = i
        if hist.shape[0] > 0:
            hist[nhist, 0] = a
            hist[nhist, 1] = l
            hist[nhist, 2] = x
            hist[nhist, 3] = i
            hist[nhist, 4] = pred
        return nhist + 1

    @njit
    def step(st, owner, length, pe, pc, hist, nhist, ext, i, x):
        # ext = [argmin so far, argmax so far, min, max]; -1 before the first element
        lo_i, hi_i = ext[0], ext[1]

        # increasing, two-element tail
        l_i2, pe_i2, pc_i2 = 1, -1, -1
        if lo_i >= 0 and ext[2] < x:
            l_i2, pe_i2, pc_i2 = 2, lo_i, C_LONE
        q = find(st, DEC3S, x, True)
        if q > 0 and q + 1 > l_i2:
            l_i2, pe_i2, pc_i2 = q + 1, owner[DEC3S, q], C_DEC3
        # increasing, three or more
        l_i3, pe_i3, pc_i3 = 0, -1, -1
        q = find(st, INC2, x, True)
        if q >= 2:
            l_i3, pe_i3, pc_i3 = q + 1, owner[INC2, q], C_INC2
        q = find(st, INC3S, x, True)
        if q > 0 and q + 1 > l_i3:
            l_i3, pe_i3, pc_i3 = q + 1, owner[INC3S, q], C_INC3
        # decreasing, two-element tail
        l_d2, pe_d2, pc_d2 = 1, -1, -1
        if hi_i >= 0 and ext[3] > x:
            l_d2, pe_d2, pc_d2 = 2, hi_i, C_LONE
        q = find(st, INC3L, x, False)
        if q > 0 and q + 1 > l_d2:
            l_d2, pe_d2, pc_d2 = q + 1, owner[INC3L, q], C_INC3
        # decreasing, three or more
        l_d3, pe_d3, pc_d3 = 0, -1, -1
        q = find(st, DEC2, x, False)
        if q >= 2:
            l_d3, pe_d3, pc_d3 = q + 1, owner[DEC2, q], C_DEC2
        q = find(st, DEC3L, x, False)
        if q > 0 and q + 1 > l_d3:
            l_d3, pe_d3, pc_d3 = q + 1, owner[DEC3L, q], C_DEC3

        length[i, C_INC2] = l_i2
        pe[i, C_INC2] = pe_i2
        pc[i, C_INC2] = pc_i2
        length[i, C_INC3] = l_i3
        pe[i, C_INC3] = pe_i3
        pc[i, C_INC3] = pc_i3
        length[i, C_DEC2] = l_d2
        pe[i, C_DEC2] = pe_d2
        pc[i, C_DEC2] = pc_d2
        length[i, C_DEC3] = l_d3
        pe[i, C_DEC3] = pe_d3
        pc[i, C_DEC3] = pc_d3

        nhist = write(st, owner, hist, nhist, INC2, l_i2, x, i, pe_i2, True)
        nhist = write(st, owner, hist, nhist, DEC2, l_d2, x, i, pe_d2, False)
        if l_i3 > 0:
            nhist = write(st, owner, hist, nhist, INC3S, l_i3, x, i, pe_i3, True)
            nhist = write(st, owner, hist, nhist, INC3L, l_i3, x, i, pe_i3, False)
        if l_d3 > 0:
            nhist = write(st, owner, hist, nhist, DEC3L, l_d3, x, i, pe_d3, False)
            nhist = write(st, owner, hist, nhist, DEC3S, l_d3, x, i, pe_d3, True)

        if lo_i < 0 or x < ext[2]:
            ext[0] = i
            ext[2] = x
        if hi_i < 0 or x > ext[3]:
            ext[1] = i
            ext[3] = x
        return nhist

    @njit
    def run(st, v, owner, length, pe, pc, hist):
        ext = np.full(4, -1, dtype=np.int64)
        nhist = 0
        best, best_i, best_c = 0, -1, -1
        for i in range(len(v)):
            nhist = step(st, owner, length, pe, pc, hist, nhist, ext, i, v[i])
            # ties go to the most recent element
            if length[i, C_INC3] >= best and length[i, C_INC3] > 0:
                best, best_i, best_c = length[i, C_INC3], i, C_INC3
            if length[i, C_DEC3] >= best and length[i, C_DEC3] > 0:
                best, best_i, best_c = length[i, C_DEC3], i, C_DEC3
        return best, best_i, best_c, nhist

    return step, run


_ast_step, _ast_run = _make_kernels(_ast_find, _ast_get, _ast_put)
_pfm_step, _pfm_run = _make_kernels(_pfm_find, _pfm_get, _pfm_put)


def _tables(n, history):
    owner = np.full((6, n + 2), -1, dtype=np.int64)
    length = np.zeros((n, 4), dtype=np.int32)
    pe = np.full((n, 4), -1, dtype=np.int32)
    pc = np.full((n, 4), -1, dtype=np.int8)
    hist = np.zeros((6 * n if history else 0, 5), dtype=np.int64)
    return owner, length, pe, pc, hist


def _walk_back(pe, pc, i, c):
    out = []
    while i >= 0:
        out.append(int(i))
        if c == C_LONE:
            break
        i, c = int(pe[i, c]), int(pc[i, c])
    out.reverse()
    return out


def _solve(v, backend):
    n = len(v)
    if n < 3:
        return None
    owner, length, pe, pc, hist = _tables(n, False)
    if backend == "perm":
        best, bi, bc, _ = _pfm_run(_pfm_new(n), v, owner, length, pe, pc, hist)
    else:
        best, bi, bc, _ = _ast_run(_ast_new(n), v, owner, length, pe, pc, hist)
    if best < 3:
        return None
    witness = _walk_back(pe, pc, bi, bc)
    assert len(witness) == best
    return Rollercoaster(witness)


def longest_rollercoaster(seq) -> Rollercoaster | None:
    """A longest rollercoaster, or None when no subsequence of length >= 3 is one."""
    return _solve(keys_of(seq), "general")


def longest_rollercoaster_perm(perm) -> Rollercoaster | None:
    """Same answer length as ``longest_rollercoaster``, for permutations of 1..n."""
    v = np.asarray(keys_of(perm), dtype=np.int64)
    if not np.array_equal(np.sort(v), np.arange(1, len(v) + 1)):
        raise NotAPermutation("input must be a permutation of 1..n")
    return _solve(v, "perm")


def normalize_to_permutation(seq) -> np.ndarray:
    """Order-isomorphic permutation of 1..n via LSD radix sort on 16-bit digits."""
    v = np.asarray(keys_of(seq), dtype=np.int64)
    u = v.view(np.uint64) ^ np.uint64(1 << 63)
    order = np.arange(len(v))
    for shift in range(0, 64, 16):
        digit = ((u[order] >> np.uint64(shift)) & np.uint64(0xFFFF)).astype(np.uint16)
        order = order[np.argsort(digit, kind="stable")]
    if len(v) > 1 and np.any(np.diff(v[order]) == 0):
        raise DuplicateValue("values are not pairwise distinct")
    perm = np.empty(len(v), dtype=np.int64)
    perm[order] = np.arange(1, len(v) + 1)
    return perm


def longest_increasing(seq) -> list[int]:
    """Positions of a longest strictly increasing subsequence (patience sorting)."""
    from bisect import bisect_left

    v = keys_of(seq).tolist()
    tails, tail_idx = [], []
    back = [-1] * len(v)
    for i, x in enumerate(v):
        pos = bisect_left(tails, x)
        if pos == len(tails):
            tails.append(x)
            tail_idx.append(i)
        else:
            tails[pos] = x
            tail_idx[pos] = i
        back[i] = tail_idx[pos - 1] if pos else -1
    out = []
    i = tail_idx[-1] if tail_idx else -1
    while i >= 0:
        out.append(i)
        i = back[i]
    return out[::-1]


@dataclass
class RaceTable:
    """Incremental form of the search: feed values one at a time.

    ``history`` lists every accepted write as ``(array name, l, value,
    element index, predecessor index)`` with -1 for no predecessor;
    ``cells(name)`` shows one array as ``{l: value}``.
    """

    capacity: int

    def __post_init__(self):
        n = self.capacity
        self._st = _ast_new(n)
        self._owner, self._length, self._pe, self._pc, self._hist = _tables(n, True)
        self._ext = np.full(4, -1, dtype=np.int64)
        self._nhist = 0
        self._values = []
        self._seen = set()

    def process(self, x: int) -> None:
        x = int(x)
        if x in self._seen:
            raise DuplicateValue(f"value {x} already processed")
        if len(self._values) >= self.capacity:
            raise ValueError("race table is full")
        self._seen.add(x)
        i = len(self._values)
        self._values.append(x)
        self._nhist = _ast_step(
            self._st, self._owner, self._length, self._pe, self._pc,
            self._hist, self._nhist, self._ext, i, x,
        )

    def __len__(self) -> int:
        return len(self._values)

    def cells(self, array: str) -> dict:
        a = ARRAY_NAMES.index(array)
        out = {}
        for l in range(1, self.capacity + 1):
            full, val = _ast_get(self._st, a, l)
            if full:
                out[l] = int(val)
        return out

    def owners(self, array: str) -> dict:
        a = ARRAY_NAMES.index(array)
        return {l: int(self._owner[a, l]) for l in self.cells(array)}

    @property
    def history(self) -> list:
        return [
            (ARRAY_NAMES[a], l, x, i, p)
            for a, l, x, i, p in self._hist[: self._nhist].tolist()
        ]

    def class_lengths(self, i: int) -> dict:
        """Longest partial rollercoaster of each class ending at element ``i``."""
        return {CLASS_NAMES[c]: int(self._length[i, c]) for c in range(4)}

    def best(self) -> Rollercoaster | None:
        n = len(self._values)
        best, bi, bc = 0, -1, -1
        for i in range(n):
            for c in (C_INC3, C_DEC3):
                if self._length[i, c] >= best and self._length[i, c] > 0:
                    best, bi, bc = int(self._length[i, c]), i, c
        if best < 3:
            return None
        return Rollercoaster(_walk_back(self._pe, self._pc, bi, bc))


def process_element(table: RaceTable, x: int) -> None:
    table.process(x)
