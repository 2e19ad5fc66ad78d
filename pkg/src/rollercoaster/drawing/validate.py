"""Checks a drawing against the tree it claims to draw.

Every check appends human-readable messages to the report instead of
raising, so one run lists everything that is wrong.  Planarity compares all
pairs of segments; two edges may only touch at the position of a vertex
they share.  Integer coordinates go through a compiled kernel, anything
else through exact ``Fraction`` arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Integral

import numpy as np
from numba import njit

from .geometry import LEFT_OF, OPPOSITE, heading, port
from .model import LEFT, PathGraph

MAX_REPORTED = 20


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, message: str) -> None:
        self.violations.append(message)

    def __bool__(self) -> bool:
        return self.ok


@njit(cache=True)
def _crossings(seg, owner, ends, px, py, limit):
    # seg rows are (xlo, ylo, xhi, yhi); ends[e] = (u, v); p[x|y][w] = position of w
    m = seg.shape[0]
    out = np.empty((limit, 2), dtype=np.int64)
    found = 0
    for a in range(m):
        for b in range(a + 1, m):
            ea, eb = owner[a], owner[b]
            if ea == eb:
                continue
            lox = max(seg[a, 0], seg[b, 0])
            hix = min(seg[a, 2], seg[b, 2])
            if lox > hix:
                continue
            loy = max(seg[a, 1], seg[b, 1])
            hiy = min(seg[a, 3], seg[b, 3])
            if loy > hiy:
                continue
            ok = False
            if lox == hix and loy == hiy:
                for w in (ends[ea, 0], ends[ea, 1]):
                    if (w == ends[eb, 0] or w == ends[eb, 1]) and px[w] == lox and py[w] == loy:
                        ok = True
            if not ok:
                out[found, 0] = ea
                out[found, 1] = eb
                found += 1
                if found == limit:
                    return out[:found]
    return out[:found]


def _crossings_exact(boxes, owner, ends, pos, limit):
    out = []
    for a in range(len(boxes)):
        for b in range(a + 1, len(boxes)):
            ea, eb = owner[a], owner[b]
            if ea == eb:
                continue
            lox, hix = max(boxes[a][0], boxes[b][0]), min(boxes[a][2], boxes[b][2])
            loy, hiy = max(boxes[a][1], boxes[b][1]), min(boxes[a][3], boxes[b][3])
            if lox > hix or loy > hiy:
                continue
            shared = set(ends[ea]) & set(ends[eb])
            if lox == hix and loy == hiy and any(pos[w] == (lox, loy) for w in shared):
                continue
            out.append((ea, eb))
            if len(out) == limit:
                return out
    return out


def _all_small_ints(coords):
    if not all(type(c) is int or isinstance(c, (Integral, np.integer)) for c in coords):
        return False
    return not coords or (-(2**62) < min(coords) and max(coords) < 2**62)


def _planarity(drawing, edges, report):
    boxes, owner = [], []
    for k, e in enumerate(edges):
        line = drawing.polyline(e)
        for p, q in zip(line, line[1:]):
            if p == q:
                continue
            boxes.append((min(p[0], q[0]), min(p[1], q[1]), max(p[0], q[0]), max(p[1], q[1])))
            owner.append(k)
    ids = sorted(drawing.positions)
    index = {w: t for t, w in enumerate(ids)}
    ends = [(index[e.u], index[e.v]) for e in edges]
    coords = [c for b in boxes for c in b] + [c for w in ids for c in drawing.positions[w]]
    if _all_small_ints(coords):
        hits = _crossings(
            np.array(boxes, dtype=np.int64).reshape(-1, 4),
            np.array(owner, dtype=np.int64),
            np.array(ends, dtype=np.int64).reshape(-1, 2),
            np.array([drawing.positions[w][0] for w in ids], dtype=np.int64),
            np.array([drawing.positions[w][1] for w in ids], dtype=np.int64),
            MAX_REPORTED,
        ).tolist()
    else:
        exact = [tuple(Fraction(c) for c in b) for b in boxes]
        pos = [tuple(Fraction(c) for c in drawing.positions[w]) for w in ids]
        hits = _crossings_exact(exact, owner, ends, pos, MAX_REPORTED)
    for ea, eb in hits:
        a, b = edges[ea], edges[eb]
        report.add(f"edges {a.u}-{a.v} and {b.u}-{b.v} intersect away from a shared vertex")


def _ports(drawing):
    """``vertex -> {neighbour: direction the edge leaves the vertex}``."""
    out = {}
    for e in drawing.edges:
        line = drawing.polyline(e)
        out.setdefault(e.u, {})[e.v] = port(line, True)
        out.setdefault(e.v, {})[e.u] = port(line, False)
    return out


def validate_drawing(drawing, tree, points=None, x_monotone: bool | None = None) -> ValidationReport:
    """Report every way ``drawing`` fails to be a planar one-bend drawing of ``tree``.

    ``points`` restricts vertex positions to a given point set.  Paths are
    also checked for x-monotonicity unless ``x_monotone=False``.
    """
    report = ValidationReport()
    want = {frozenset(e) for e in tree.edges()}
    n = len(tree.spine) + len(tree.leaves)

    # placement
    if set(drawing.positions) != set(range(n)):
        missing = sorted(set(range(n)) - set(drawing.positions))
        extra = sorted(set(drawing.positions) - set(range(n)))
        report.add(f"vertex ids differ from the tree: missing {missing[:10]}, extra {extra[:10]}")
    spots = list(drawing.positions.values())
    if len(set(spots)) != len(spots):
        report.add("two vertices share a position")
    if points is not None:
        allowed = {tuple(p) for p in points}
        off = [w for w, p in drawing.positions.items() if tuple(p) not in allowed]
        if off:
            report.add(f"vertices {off[:10]} are not on input points")

    # edge set
    got = [frozenset((e.u, e.v)) for e in drawing.edges]
    if len(set(got)) != len(got):
        report.add("an edge is drawn twice")
    if set(got) != want:
        report.add(f"drawn edges differ from the tree ({len(set(got) - want)} extra, {len(want - set(got))} missing)")
    edges = [e for e in drawing.edges if e.u in drawing.positions and e.v in drawing.positions]

    # shape of each edge
    for e in edges:
        if len(e.bends) > 1:
            report.add(f"edge {e.u}-{e.v} has {len(e.bends)} bends")
        line = drawing.polyline(e)
        for p, q in zip(line, line[1:]):
            if p != q and heading(p, q) is None:
                report.add(f"edge {e.u}-{e.v} has a segment that is not axis-parallel")
                break
    if report.violations:
        return report

    _planarity(drawing, edges, report)

    ports = _ports(drawing)
    spine = tree.spine
    for t in range(1, len(spine) - 1):
        w = spine[t]
        back, ahead = ports[w].get(spine[t - 1]), ports[w].get(spine[t + 1])
        if back is None or ahead != OPPOSITE[back]:
            report.add(f"spine vertex {w} is not straight-through")
            continue
        hanging = {leaf: d for leaf, d in ports[w].items() if leaf not in (spine[t - 1], spine[t + 1])}
        if not hanging:
            continue
        sideways = {LEFT_OF[ahead], OPPOSITE[LEFT_OF[ahead]]}
        if len(hanging) != 2 or set(hanging.values()) != sideways:
            report.add(f"leaves of spine vertex {w} do not leave on both sides of the spine")
            continue
        for leaf, d in hanging.items():
            expected = LEFT_OF[ahead] if tree.leaves[leaf][1] == LEFT else OPPOSITE[LEFT_OF[ahead]]
            if d != expected:
                report.add(f"leaf {leaf} of spine vertex {w} is on the wrong side")

    if x_monotone is None:
        x_monotone = isinstance(tree, PathGraph)
    if x_monotone:
        xs = [drawing.positions[w][0] for w in spine]
        if any(a >= b for a, b in zip(xs, xs[1:])):
            report.add("path vertices are not in increasing x order")
        for e in edges:
            lx = [p[0] for p in drawing.polyline(e)]
            if lx != sorted(lx) and lx != sorted(lx, reverse=True):
                report.add(f"edge {e.u}-{e.v} is not x-monotone")
    return report
