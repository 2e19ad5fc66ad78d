"""Rollercoasters whose runs all have at least k elements (k >= 4).

The sweep stops each window as soon as it holds both a k-ascent and a
k-descent, then appends the window's longest decreasing subsequence to the
ascending chain and its longest increasing subsequence to the descending one,
which swaps the roles of the two chains.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .core import Rollercoaster, keys_of, validate
from .errors import BadK, EmptyWindow, TooShort


@dataclass(frozen=True)
class WindowStats:
    """Per-window record: swept points, the witness alpha with
    (alpha-1)(k-1) < m-1 <= alpha(k-1), and the two chain lengths."""

    m: int
    alpha: int
    ascent: int
    descent: int
    last: bool = False


def _lis_from(vals):
    """Length of the longest increasing subsequence starting at each position."""
    tails = []
    out = [0] * len(vals)
    for i in range(len(vals) - 1, -1, -1):
        x = -vals[i]
        pos = bisect_left(tails, x)
        if pos == len(tails):
            tails.append(x)
        else:
            tails[pos] = x
        out[i] = pos + 1
    return out


def _smallest_longest_increasing(vals):
    """Positions of the lexicographically smallest longest increasing subsequence."""
    if not vals:
        return []
    lengths = _lis_from(vals)
    need = max(lengths)
    chosen = []
    last = None
    for j, x in enumerate(vals):
        if lengths[j] == need and (last is None or x > last):
            chosen.append(j)
            last = x
            need -= 1
            if need == 0:
                break
    return chosen


def longest_monotone(window) -> tuple[list, list]:
    """Longest increasing and longest decreasing subsequences, as positions.

    Ties go to the lexicographically smallest position list.
    """
    vals = keys_of(window).tolist()
    if not vals:
        raise EmptyWindow("window is empty")
    asc = _smallest_longest_increasing(vals)
    desc = _smallest_longest_increasing([-x for x in vals])
    return asc, desc


def _patience_push(tails, x):
    pos = bisect_left(tails, x)
    if pos == len(tails):
        tails.append(x)
    else:
        tails[pos] = x


def _alpha(m, k):
    # smallest alpha with m - 1 <= alpha (k - 1)
    return max(1, -(-(m - 1) // (k - 1)))


def _strip_first_run(v, chain, k):
    if len(chain) < 2:
        return []
    up = v[chain[1]] > v[chain[0]]
    first = 2
    while first < len(chain) and (v[chain[first]] > v[chain[first - 1]]) == up:
        first += 1
    if first < k:
        chain = chain[first - 1:]
    return chain if len(chain) >= k else []


def k_rollercoaster(seq, k: int, trace: list | None = None) -> Rollercoaster:
    """A k-rollercoaster of length at least n/(2(k-1)) - 3k/2.

    ``trace``, when given, receives one ``WindowStats`` per window.  If the
    sweep keeps nothing (possible when the bound is not positive), the
    longest monotone subsequence of the whole input is returned instead.
    """
    if k < 4:
        raise BadK("k must be at least 4")
    keys = keys_of(seq)
    v = keys.tolist()
    n = len(v)
    if n <= (k - 1) ** 2:
        raise TooShort(f"need n >= (k-1)^2 + 1 = {(k - 1) ** 2 + 1}")
    ra, rd = [0], [0]
    start = 1
    while start < n:
        inc, dec = [], []
        stop = None
        for p in range(start, n):
            _patience_push(inc, v[p])
            _patience_push(dec, -v[p])
            if len(inc) >= k and len(dec) >= k:
                stop = p + 1
                break
        end = n if stop is None else stop
        m = end - start
        window = v[start:end]
        if stop is None and m <= (k - 1) ** 2:
            if trace is not None:
                trace.append(WindowStats(m, _alpha(m, k), len(inc), len(dec), True))
            break
        asc, desc = longest_monotone(window)
        if trace is not None:
            trace.append(WindowStats(m, _alpha(m, k), len(asc), len(desc), stop is None))
        if stop is None:
            if len(asc) >= len(desc):
                rd.extend(start + j for j in asc)
            else:
                ra.extend(start + j for j in desc)
            break
        ra.extend(start + j for j in desc)
        rd.extend(start + j for j in asc)
        ra, rd = rd, ra
        start = stop
    best = max(_strip_first_run(v, ra, k), _strip_first_run(v, rd, k), key=len)
    if len(best) < k or not validate(keys, best, k):
        asc, desc = longest_monotone(keys)
        best = max(asc, desc, key=len)
    return Rollercoaster(best, min_run=k)


def theorem_bound(n: int, k: int) -> float:
    return n / (2 * (k - 1)) - 3 * k / 2


def proof_bound(n: int, k: int) -> float:
    """The sharper bound reached at the end of the length argument."""
    return n / (2 * (k - 1)) - 3 * (k - 1) / 2
