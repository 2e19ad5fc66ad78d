"""van Emde Boas successor dictionary over an integer universe.

A node covering ``2**k`` keys splits into ``2**hi`` clusters of ``2**lo``
keys (``lo = k // 2``) plus a summary over the cluster numbers; nodes with
``k <= 6`` are single 64-bit words.  As usual the minimum of an internal
node is kept out of its clusters.

The structure lives in a slice of one ``int64`` buffer so numba kernels
pass a single array around (several structures can share a buffer).  Node
records of ``NF`` fields are laid out back to back and node references are
absolute offsets into the buffer.  A scratch area just before the root is
the explicit stack for deletion and successor queries.  Kernels take the
buffer and the root offset.  ``SuccessorDict`` is the Python face.
"""
from functools import lru_cache

import numpy as np
from numba import njit

from ..errors import IndexOutOfRange

_DEBRUIJN = np.uint64(0x03F79D71B4CB0A89)
_DEBRUIJN_TABLE = np.array(
    [0, 1, 48, 2, 57, 49, 28, 3, 61, 58, 50, 42, 38, 29, 17, 4,
     62, 55, 59, 36, 53, 51, 43, 22, 45, 39, 33, 30, 24, 18, 12, 5,
     63, 47, 56, 27, 60, 41, 37, 16, 54, 35, 52, 21, 44, 32, 23, 11,
     46, 26, 40, 15, 34, 20, 31, 10, 25, 14, 19, 9, 13, 8, 7, 6],
    dtype=np.int64,
)
_ONE = np.uint64(1)
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
LEAF_BITS = 6

# node record fields
K, SUM, CL, MIN, MAX, W = range(6)
NF = 6
_STACK = 64


@njit(cache=True)
def lowest_bit(w):
    # w != 0
    low = w & (~w + _ONE)
    return _DEBRUIJN_TABLE[(low * _DEBRUIJN) >> np.uint64(58)]


@njit(cache=True)
def highest_bit(w):
    # w != 0
    r = 0
    if w >> np.uint64(32):
        w >>= np.uint64(32)
        r += 32
    if w >> np.uint64(16):
        w >>= np.uint64(16)
        r += 16
    if w >> np.uint64(8):
        w >>= np.uint64(8)
        r += 8
    if w >> np.uint64(4):
        w >>= np.uint64(4)
        r += 4
    if w >> np.uint64(2):
        w >>= np.uint64(2)
        r += 2
    if w >> np.uint64(1):
        r += 1
    return r


@njit(cache=True)
def _word(s, node):
    return np.uint64(s[node + W])


@njit(cache=True)
def _set_word(s, node, w):
    s[node + W] = np.int64(w)


@njit(cache=True)
def veb_min(s, root):
    return s[root + MIN]


@njit(cache=True)
def veb_max(s, root):
    return s[root + MAX]


@njit(cache=True)
def veb_member(s, node, x):
    while True:
        if s[node + MIN] < 0:
            return False
        if s[node + K] <= LEAF_BITS:
            return (_word(s, node) >> np.uint64(x)) & _ONE == _ONE
        if x == s[node + MIN] or x == s[node + MAX]:
            return True
        lo = s[node + K] >> 1
        node = s[node + CL] + (x >> lo) * NF
        x = x & ((1 << lo) - 1)


@njit(cache=True)
def _put_into_empty(s, node, x):
    if s[node + K] <= LEAF_BITS:
        _set_word(s, node, _ONE << np.uint64(x))
    s[node + MIN] = x
    s[node + MAX] = x


@njit(cache=True)
def veb_insert(s, node, x):
    """Insert ``x`` (assumed absent) below ``node``.

    Only one branch per level does real work (an empty cluster takes its
    element in O(1)), so the descent is a loop.
    """
    while True:
        if s[node + MIN] < 0:
            _put_into_empty(s, node, x)
            return
        if s[node + K] <= LEAF_BITS:
            _set_word(s, node, _word(s, node) | (_ONE << np.uint64(x)))
            if x < s[node + MIN]:
                s[node + MIN] = x
            if x > s[node + MAX]:
                s[node + MAX] = x
            return
        if x < s[node + MIN]:
            x, s[node + MIN] = s[node + MIN], x
        if x > s[node + MAX]:
            s[node + MAX] = x
        lo = s[node + K] >> 1
        h = x >> lo
        c = s[node + CL] + h * NF
        low = x & ((1 << lo) - 1)
        if s[c + MIN] < 0:
            _put_into_empty(s, c, low)
            node = s[node + SUM]
            x = h
        else:
            node = c
            x = low


_PARTIAL = 0
_EMPTIED = 1


@njit(cache=True)
def veb_delete(s, root, x):
    """Delete ``x`` (assumed present) from the structure at ``root``.

    As with insertion only one branch per level is non-trivial: a cluster
    that empties held a single element.  Maxima are repaired bottom-up from
    the scratch stack once the descent finishes.
    """
    st_node = root - 3 * _STACK
    node = root
    st_x = st_node + _STACK
    st_kind = st_x + _STACK
    depth = 0
    while True:
        if s[node + K] <= LEAF_BITS:
            w = _word(s, node) & ~(_ONE << np.uint64(x))
            _set_word(s, node, w)
            if w == 0:
                s[node + MIN] = -1
                s[node + MAX] = -1
            else:
                s[node + MIN] = lowest_bit(w)
                s[node + MAX] = highest_bit(w)
            break
        if s[node + MIN] == s[node + MAX]:
            s[node + MIN] = -1
            s[node + MAX] = -1
            break
        lo = s[node + K] >> 1
        if x == s[node + MIN]:
            first = s[s[node + SUM] + MIN]
            x = (first << lo) | s[s[node + CL] + first * NF + MIN]
            s[node + MIN] = x
        h = x >> lo
        c = s[node + CL] + h * NF
        s[st_node + depth] = node
        s[st_x + depth] = x
        if s[c + MIN] == s[c + MAX]:
            s[c + MIN] = -1
            s[c + MAX] = -1
            if s[c + K] <= LEAF_BITS:
                s[c + W] = 0
            s[st_kind + depth] = _EMPTIED
            depth += 1
            node = s[node + SUM]
            x = h
        else:
            s[st_kind + depth] = _PARTIAL
            depth += 1
            node = c
            x = x & ((1 << lo) - 1)
    while depth > 0:
        depth -= 1
        node = s[st_node + depth]
        x = s[st_x + depth]
        if x != s[node + MAX]:
            continue
        lo = s[node + K] >> 1
        if s[st_kind + depth] == _PARTIAL:
            h = x >> lo
            s[node + MAX] = (h << lo) | s[s[node + CL] + h * NF + MAX]
        else:
            top = s[s[node + SUM] + MAX]
            if top < 0:
                s[node + MAX] = s[node + MIN]
            else:
                s[node + MAX] = (top << lo) | s[s[node + CL] + top * NF + MAX]


_CLUSTER = 0
_SUMMARY = 1


@njit(cache=True)
def veb_successor(s, root, x):
    """Smallest member strictly greater than ``x`` (``x >= 0``), or -1."""
    st_node = root - 3 * _STACK
    node = root
    st_val = st_node + _STACK
    st_kind = st_val + _STACK
    depth = 0
    r = -1
    while True:
        if s[node + K] <= LEAF_BITS:
            if x < 63:
                w = _word(s, node) & (_ALL << np.uint64(x + 1))
                if w != 0:
                    r = lowest_bit(w)
            break
        if s[node + MIN] < 0:
            break
        if x < s[node + MIN]:
            r = s[node + MIN]
            break
        lo = s[node + K] >> 1
        h = x >> lo
        low = x & ((1 << lo) - 1)
        c = s[node + CL] + h * NF
        s[st_node + depth] = node
        if s[c + MAX] >= 0 and low < s[c + MAX]:
            s[st_kind + depth] = _CLUSTER
            s[st_val + depth] = h << lo
            depth += 1
            node = c
            x = low
        else:
            s[st_kind + depth] = _SUMMARY
            depth += 1
            node = s[node + SUM]
            x = h
    while depth > 0:
        depth -= 1
        if s[st_kind + depth] == _CLUSTER:
            r = s[st_val + depth] | r
        elif r >= 0:
            node = s[st_node + depth]
            r = (r << (s[node + K] >> 1)) | s[s[node + CL] + r * NF + MIN]
    return r


@njit(cache=True)
def veb_predecessor(s, root, x):
    """Largest member strictly smaller than ``x`` (``x >= 0``), or -1."""
    st_node = root - 3 * _STACK
    node = root
    st_val = st_node + _STACK
    st_kind = st_val + _STACK
    depth = 0
    r = -1
    while True:
        if s[node + K] <= LEAF_BITS:
            if x > 0:
                if x >= 64:
                    w = _word(s, node)
                else:
                    w = _word(s, node) & ((_ONE << np.uint64(x)) - _ONE)
                if w != 0:
                    r = highest_bit(w)
            break
        if s[node + MIN] < 0:
            break
        if x > s[node + MAX]:
            r = s[node + MAX]
            break
        lo = s[node + K] >> 1
        h = x >> lo
        low = x & ((1 << lo) - 1)
        c = s[node + CL] + h * NF
        s[st_node + depth] = node
        if s[c + MIN] >= 0 and low > s[c + MIN]:
            s[st_kind + depth] = _CLUSTER
            s[st_val + depth] = h << lo
            depth += 1
            node = c
            x = low
        else:
            s[st_kind + depth] = _SUMMARY
            s[st_val + depth] = x
            depth += 1
            node = s[node + SUM]
            x = h
    while depth > 0:
        depth -= 1
        node = s[st_node + depth]
        if s[st_kind + depth] == _CLUSTER:
            r = s[st_val + depth] | r
        elif r >= 0:
            r = (r << (s[node + K] >> 1)) | s[s[node + CL] + r * NF + MAX]
        elif s[st_val + depth] > s[node + MIN]:
            r = s[node + MIN]
    return r


@njit(cache=True)
def veb_ceiling(s, root, x):
    """Smallest member ``>= x``, or -1."""
    if x <= 0:
        if veb_member(s, root, 0):
            return 0
        return veb_successor(s, root, 0)
    if veb_member(s, root, x):
        return x
    return veb_successor(s, root, x)


@njit(cache=True)
def veb_floor(s, root, x):
    """Largest member ``<= x``, or -1."""
    if x < 0:
        return -1
    if veb_member(s, root, x):
        return x
    return veb_predecessor(s, root, x)


def _node_count(k):
    if k <= LEAF_BITS:
        return 1
    lo = k // 2
    hi = k - lo
    return 1 + _node_count(hi) + (1 << hi) * _node_count(lo)


@lru_cache(maxsize=None)
def _template(k):
    # node records with offsets relative to the root
    total = _node_count(k)
    rec = np.zeros((total, NF), dtype=np.int64)
    rec[:, SUM] = -1
    rec[:, CL] = -1
    rec[:, MIN] = -1
    rec[:, MAX] = -1
    nxt = 1
    stack = [(0, k)]
    while stack:
        node, bits = stack.pop()
        rec[node, K] = bits
        if bits <= LEAF_BITS:
            continue
        lo = bits // 2
        hi = bits - lo
        rec[node, SUM] = nxt * NF
        rec[node, CL] = (nxt + 1) * NF
        stack.append((nxt, hi))
        stack.extend((nxt + 1 + h, lo) for h in range(1 << hi))
        nxt += 1 + (1 << hi)
    rec.setflags(write=False)
    return rec


def universe_bits(universe):
    """Smallest ``k >= 1`` with ``2**k >= universe``."""
    return max(1, (max(universe, 1) - 1).bit_length())


ROOT = 3 * _STACK


def veb_footprint(universe):
    """Buffer cells needed for keys ``0 .. universe-1``, scratch included."""
    return ROOT + _node_count(universe_bits(universe)) * NF


def veb_init(buf, start, universe):
    """Lay out an empty structure at ``buf[start:]``; returns its root offset."""
    rec = _template(universe_bits(universe)).copy()
    root = start + ROOT
    for f in (SUM, CL):
        col = rec[:, f]
        col[col >= 0] += root
    buf[start:root] = 0
    buf[root:root + rec.size] = rec.ravel()
    return root


def new_state(universe):
    """Standalone buffer for keys ``0 .. universe-1``; its root is ``ROOT``."""
    buf = np.empty(veb_footprint(universe), dtype=np.int64)
    veb_init(buf, 0, universe)
    return buf


class SuccessorDict:
    """Integer set over ``{0, ..., universe}`` with O(log log u) successor queries.

    >>> t = SuccessorDict(100)
    >>> for key in (3, 50, 7):
    ...     t.add(key)
    >>> t.successor(7), t.predecessor(7), t.ceiling(50)
    (50, 3, 50)
    """

    def __init__(self, universe):
        if universe < 0:
            raise ValueError("universe must be non-negative")
        self.universe = universe
        self._state = new_state(universe + 1)
        self._size = 0

    def _check(self, key):
        if not 0 <= key <= self.universe:
            raise IndexOutOfRange(f"key {key} outside 0..{self.universe}")

    def __len__(self):
        return self._size

    def __contains__(self, key):
        if not 0 <= key <= self.universe:
            return False
        return bool(veb_member(self._state, ROOT, key))

    def __iter__(self):
        key = self.min()
        while key is not None:
            yield key
            key = self.successor(key)

    def add(self, key):
        self._check(key)
        if key in self:
            return
        veb_insert(self._state, ROOT, key)
        self._size += 1

    def discard(self, key):
        if key not in self:
            return
        veb_delete(self._state, ROOT, key)
        self._size -= 1

    def min(self):
        value = int(self._state[ROOT + MIN])
        return None if value < 0 else value

    def max(self):
        value = int(self._state[ROOT + MAX])
        return None if value < 0 else value

    def successor(self, key):
        """Smallest member strictly greater than ``key``."""
        if key < 0:
            return self.min()
        if key >= self.universe:
            return None
        value = veb_successor(self._state, ROOT, key)
        return None if value < 0 else int(value)

    def predecessor(self, key):
        """Largest member strictly smaller than ``key``."""
        if key > self.universe:
            return self.max()
        if key <= 0:
            return None
        value = veb_predecessor(self._state, ROOT, key)
        return None if value < 0 else int(value)

    def ceiling(self, key):
        return key if key in self else self.successor(key)

    def floor(self, key):
        return key if key in self else self.predecessor(key)
