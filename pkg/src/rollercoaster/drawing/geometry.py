"""Point sets in general orthogonal position and L-shaped edge routing."""
from __future__ import annotations

from ..core import PointSet
from ..errors import NotGeneralPosition

N, E, S, W = "N", "E", "S", "W"
OPPOSITE = {N: S, S: N, E: W, W: E}
# a quarter turn counter-clockwise: the left-hand side when travelling in that direction
LEFT_OF = {N: W, W: S, S: E, E: N}


def as_point_set(points) -> list:
    """Sorted-by-x list of ``(x, y)``; rejects shared coordinates."""
    pts = sorted(tuple(p) for p in (points.points if isinstance(points, PointSet) else points))
    xs = {p[0] for p in pts}
    ys = {p[1] for p in pts}
    if len(xs) != len(pts) or len(ys) != len(pts):
        raise NotGeneralPosition("no two points may share an x or a y coordinate")
    return pts


def bend_point(p, q, first: str):
    """Corner of the L from ``p`` to ``q`` leaving ``p`` horizontally (``'h'``)
    or vertically (``'v'``)."""
    return (q[0], p[1]) if first == "h" else (p[0], q[1])


def heading(p, q):
    """Compass direction of the axis-parallel step ``p -> q``, or None."""
    if p == q:
        return None
    if p[1] == q[1]:
        return E if q[0] > p[0] else W
    if p[0] == q[0]:
        return N if q[1] > p[1] else S
    return None


def port(polyline, at_start: bool = True):
    """Direction in which the polyline leaves its first (or last) point."""
    pts = polyline if at_start else polyline[::-1]
    for q in pts[1:]:
        if q != pts[0]:
            return heading(pts[0], q)
    return None
