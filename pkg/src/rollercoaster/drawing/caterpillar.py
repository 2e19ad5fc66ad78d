"""Planar L-shaped drawings of top-view caterpillars.

The points are cut by x into groups of five.  The middle point (by y) of
every group forms a sequence whose long rollercoaster ``s_1 .. s_N`` carries
the spine; the other four points of a group, ``a, b, c, d`` from top to
bottom, are held back for leaves.  Spine vertices are placed two at a time
while keeping this state: the last placed vertex ``v_2k`` sits on a point
``s_i`` strictly inside a run, its edge to ``v_2k-1`` arrives vertically,
and everything placed so far except its second leaf lies left of ``s_i``.

Runs going down are handled by reading y upside down, so "top" and
"above" below always refer to the current run direction.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from ..errors import TooFewPoints
from ..greedy import half_rollercoaster
from .geometry import LEFT_OF, OPPOSITE, as_point_set, bend_point, port
from .model import LEFT, RIGHT, Drawing, OrthoEdge, TopViewCaterpillar


@dataclass(frozen=True)
class IterationStats:
    """One placement step: which rule fired, how many groups of five it
    walked past and how many spine vertices it placed."""

    case: str
    parsed: int
    placed: int


def points_needed(n: int) -> int:
    return ceil(25 * (n + 4) / 3)


def _groups(pts):
    mids, reserved = [], []
    for g in range(len(pts) // 5):
        by_y = sorted(pts[5 * g:5 * g + 5], key=lambda p: p[1])
        mids.append(by_y[2])
        reserved.append((by_y[4], by_y[3], by_y[1], by_y[0]))
    return mids, reserved


def _in_edge_port(p_prev, p, first):
    bend = bend_point(p_prev, p, first)
    return port([p, bend, p_prev])


def draw_caterpillar(points, cat, stats: list | None = None) -> Drawing:
    """Draw ``cat`` (a ``TopViewCaterpillar`` or its vertex count) on ``points``.

    ``stats``, when given, receives one ``IterationStats`` per step.
    """
    if not isinstance(cat, TopViewCaterpillar):
        cat = TopViewCaterpillar.from_vertex_count(int(cat))
    pts = as_point_set(points)
    need = points_needed(cat.n)
    if len(pts) < need:
        raise TooFewPoints(f"need at least {need} points, got {len(pts)}")
    s = cat.spine_len
    mids, reserved = _groups(pts)
    log = stats if stats is not None else []

    if s == 2:
        p, q = mids[0], mids[1]
        log.append(IterationStats("init", 2, 2))
        return Drawing({0: p, 1: q}, [OrthoEdge(0, 1, (bend_point(p, q, "h"),))], tuple(pts))

    chain = list(half_rollercoaster([m[1] for m in mids]))
    S = [mids[g] for g in chain]
    N = len(S)

    def top_down(i, up):
        a, b, c, d = reserved[chain[i]]
        return (a, b, c, d) if up else (d, c, b, a)

    def rises(i):
        return S[i + 1][1] > S[i][1]

    spine = {1: S[0], 2: S[1]}
    first = {2: "h"}  # how the edge v_{j-1} v_j leaves v_{j-1}
    hanging = [(2, top_down(0, rises(0))[1], "h")]  # (spine j, point, how it leaves v_j)
    log.append(IterationStats("init", 2, 2))
    i, v = 1, 2
    while v < s:
        up = rises(i)
        if s - v == 1:
            spine[v + 1] = S[i + 1]
            first[v + 1] = "v"
            hanging.append((v, top_down(i + 1, up)[2], "h"))
            log.append(IterationStats("last", 1, 1))
            v += 1
            break
        closing = s - v == 2
        j = i
        while j + 1 < N and (S[j + 1][1] > S[j][1]) == up:
            j += 1
        if j <= i + 4:
            if j + 1 >= N:
                raise AssertionError("rollercoaster ran out before the spine was placed")
            a, b, c, d = top_down(j, up)
            spine[v + 1], first[v + 1] = b, "v"
            spine[v + 2], first[v + 2] = S[j + 1], "h"
            hanging += [(v + 1, a, "v"), (v + 1, S[j], "v")]
            west, east = (c, d) if c[0] < d[0] else (d, c)
            hanging.append((v, west, "h"))
            if not closing:
                hanging.append((v + 2, east, "h"))
            log.append(IterationStats("case1", j + 1 - i, 2))
            i = j + 1
        else:
            a, b, c, d = top_down(i + 2, up)
            spine[v + 1], first[v + 1] = S[i + 2], "v"
            spine[v + 2], first[v + 2] = S[i + 4], "h"
            hanging.append((v, S[i + 1], "h"))
            if not closing:
                hanging.append((v + 2, S[i + 3], "h"))
            hanging += [(v + 1, b, "v"), (v + 1, c, "v")]
            log.append(IterationStats("case2", 4, 2))
            i += 4
        v += 2

    positions = {j - 1: spine[j] for j in range(1, s + 1)}
    edges = [
        OrthoEdge(j - 2, j - 1, (bend_point(spine[j - 1], spine[j], first[j]),))
        for j in range(2, s + 1)
    ]
    for j, leaf_at, how in hanging:
        hub = spine[j]
        bend = bend_point(hub, leaf_at, how)
        travel = OPPOSITE[_in_edge_port(spine[j - 1], hub, first[j])]
        side = LEFT if port([hub, bend, leaf_at]) == LEFT_OF[travel] else RIGHT
        leaf = cat.leaf_id(j, side)
        positions[leaf] = leaf_at
        edges.append(OrthoEdge(j - 1, leaf, (bend,)))
    return Drawing(positions, edges, tuple(pts))
