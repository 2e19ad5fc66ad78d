"""Linear-time rollercoaster of length at least ceil(n/2).

A left-to-right sweep keeps two chains: one whose last run ascends (``up``)
and one whose last run descends (``down``).  A point above the ascending end
or below the descending end simply extends that chain.  Otherwise the sweep
splits the following points into two ascending chains until the first
descending triple appears, then hands each chain the piece that keeps every
new run at three or more points.  The descending case is the ascending case
on negated values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Callable, Optional

from .core import Rollercoaster, keys_of, monotone_triple, validate
from .errors import TooShort, WindowExhausted


@dataclass
class TwoChainSplit:
    """Result of splitting a window into two ascending chains.

    ``A1`` starts at the ascending end, ``A2`` starts at the descending end
    followed by the first window point.  ``pred`` maps each window point of
    ``A2`` to the rightmost ``A1`` point left of it.  ``triple`` is the first
    descending triple and ``next_index`` the first point after it.
    ``mirrored`` records that the split was computed on negated values.
    """

    A1: list
    A2: list
    pred: dict
    triple: Optional[tuple] = None
    next_index: Optional[int] = None
    mirrored: bool = False
    a1_pos: dict = field(default_factory=dict, repr=False)


def _split(v, a, d, start, sign):
    n = len(v)
    A1 = [a]
    A2 = [d, start]
    pred = {start: a}
    pos = {a: 0}
    r1, r2 = a, start
    top, mid = sign * v[a], sign * v[start]
    p = start + 1
    while p < n:
        x = sign * v[p]
        if x > top:
            pos[p] = len(A1)
            A1.append(p)
            r1, top = p, x
        elif x > mid:
            A2.append(p)
            pred[p] = r1
            r2, mid = p, x
        else:
            return TwoChainSplit(A1, A2, pred, (pred[r2], r2, p), p + 1, sign < 0, pos)
        p += 1
    raise WindowExhausted(TwoChainSplit(A1, A2, pred, None, None, sign < 0, pos))


def two_chain_split(seq, a: int, d: int, start: int) -> TwoChainSplit:
    """Split the points from ``start`` on into two ascending chains.

    ``a`` and ``d`` are the ends of the ascending and the descending chain,
    with the point at ``start`` strictly between them in value.  When the
    point after ``start`` is lower the work happens on negated values, so the
    returned chains then descend in the original orientation and start at
    ``d`` and ``a`` respectively.
    """
    v = keys_of(seq).tolist()
    if not (v[d] < v[start] < v[a]):
        raise ValueError("window must start strictly between the two chain ends")
    if start + 1 < len(v) and v[start + 1] < v[start]:
        return _split(v, d, a, start, -1)
    return _split(v, a, d, start, 1)


def _sweep(v, observer=None):
    n = len(v)
    ra, rd = [0], [0]
    i = 1
    while i < n:
        if observer is not None:
            observer(ra, rd, i)
        x = v[i]
        if x > v[ra[-1]]:
            ra.append(i)
            i += 1
            continue
        if x < v[rd[-1]]:
            rd.append(i)
            i += 1
            continue
        if i == n - 1:
            # a lone point strictly between both ends cannot be placed
            break
        sign = 1 if v[i + 1] > x else -1
        up, down = (ra, rd) if sign > 0 else (rd, ra)
        try:
            sp = _split(v, up[-1], down[-1], i, sign)
        except WindowExhausted as exc:
            sp = exc.split
            if len(sp.A2) == 2:
                # the point after p_i went to A1; it keeps the new ascent at three points
                sp.A2.append(sp.A1.pop(1))
            up.extend(sp.A1[1:])
            down.extend(sp.A2[1:])
            break
        k2, k1, k = sp.triple
        cut = sp.a1_pos[k2] + 1
        up.extend(sp.A1[1:cut])
        up.append(k1)
        up.append(k)
        down.extend(sp.A2[1:])
        down.extend(sp.A1[cut:])
        # ``up`` now ends descending and ``down`` ascending, in either orientation
        ra, rd = rd, ra
        i = sp.next_index
    if observer is not None:
        observer(ra, rd, n)
    return ra, rd


def pseudo_pair(seq, observer: Callable | None = None) -> tuple[tuple, tuple]:
    """Two chains through the first point covering every point but possibly the last.

    All runs but the first have at least three elements.  The first chain is
    the one whose last run ascends.  ``observer(ra, rd, frontier)`` is called
    at every iteration boundary.
    """
    v = keys_of(seq).tolist()
    if len(v) < 8:
        raise TooShort("pseudo_pair needs at least 8 values")
    ra, rd = _sweep(v, observer)
    return tuple(ra), tuple(rd)


def strip_short_first_run(v, chain) -> list:
    """Drop the first point when the first run has two elements; chains that
    cannot become a rollercoaster come back empty."""
    chain = list(chain)
    if len(chain) >= 3 and (v[chain[1]] > v[chain[0]]) != (v[chain[2]] > v[chain[1]]):
        chain = chain[1:]
    return chain if len(chain) >= 3 else []


def _repairs(c1, c2):
    common = set(c1) & set(c2)
    if len(common) == 1:
        (p,) = common
        i1, i2 = c1.index(p), c2.index(p)
        yield c2[:i2] + c1[i1:]
        yield c1[:i1] + c2[i2:]
    for x, y in ((c1, c2), (c2, c1)):
        if len(x) >= 2 and len(y) >= 2:
            if y[1] < x[1]:
                yield y[:2] + x[1:]
            if y[-2] > x[-2]:
                yield x[:-1] + y[-2:]


def refine_pair(r1, r2, seq) -> Rollercoaster:
    """Turn a pseudo pair into one rollercoaster of length at least ceil(n/2)."""
    keys = keys_of(seq)
    v = keys.tolist()
    target = ceil(len(v) / 2)
    c1 = strip_short_first_run(v, r1)
    c2 = strip_short_first_run(v, r2)
    for c in (c1, c2):
        if len(c) >= target:
            return Rollercoaster(c)
    best = max(c1, c2, key=len)
    for cand in _repairs(c1, c2):
        if len(cand) > len(best) and all(a < b for a, b in zip(cand, cand[1:])) and validate(keys, cand):
            best = cand
    return Rollercoaster(best)


def half_rollercoaster(seq) -> Rollercoaster:
    keys = keys_of(seq)
    n = len(keys)
    if n < 5:
        raise TooShort("sequences shorter than 5 may have no rollercoaster")
    if n < 8:
        return monotone_triple(keys)
    r1, r2 = pseudo_pair(keys)
    return refine_pair(r1, r2, keys)
