"""x-monotone straight-through drawings of paths.

Consecutive L-shaped edges along an x-monotone path must alternate between
horizontal-first and vertical-first, and a vertex whose incoming edge
arrives vertically cannot be a turning point.  So a subsequence whose
turning points all sit at positions of one parity can be drawn, which is the
case when every interior run has an odd number of points.
"""
from __future__ import annotations

import numpy as np

from ..core import Rollercoaster, decompose_runs
from ..errors import PreconditionError, TooFewPoints
from ..greedy import pseudo_pair
from .geometry import as_point_set, bend_point
from .model import Drawing, OrthoEdge


def odd_run_reduce(seq, rc) -> Rollercoaster:
    """Drop the second point of every even interior run.

    The first and last runs are left alone; an even interior run has at
    least four points, so its second point is not shared with a neighbour.
    """
    idx = list(rc)
    runs = decompose_runs(seq, idx)
    drop = {r.start + 1 for r in runs[1:-1] if len(r) % 2 == 0}
    kept = [i for t, i in enumerate(idx) if t not in drop]
    return Rollercoaster(kept, getattr(rc, "min_run", 3))


def _turning(ys):
    return [t for t in range(1, len(ys) - 1) if (ys[t] - ys[t - 1]) * (ys[t + 1] - ys[t]) < 0]


def path_on_points(positions) -> Drawing:
    """Draw the path through ``positions`` (sorted by x) straight-through.

    Raises ``ValueError`` when the turning points have mixed parity.
    """
    ys = [p[1] for p in positions]
    turns = _turning(ys)
    if len({t % 2 for t in turns}) > 1:
        raise ValueError("turning points must all have the same parity")
    # the edge entering a turning point leaves its tail vertically
    vertical_parity = (turns[0] - 1) % 2 if turns else 1
    edges = []
    for i in range(len(positions) - 1):
        first = "v" if i % 2 == vertical_parity else "h"
        edges.append(OrthoEdge(i, i + 1, (bend_point(positions[i], positions[i + 1], first),)))
    return Drawing(dict(enumerate(positions)), edges)


def straight_through_path(points, n: int) -> Drawing:
    """Straight-through drawing of the n-vertex path on at least 3n - 3 points."""
    if n < 2:
        raise PreconditionError("the path needs at least 2 vertices")
    pts = as_point_set(points)
    if len(pts) < 3 * n - 3:
        raise TooFewPoints(f"need at least {3 * n - 3} points, got {len(pts)}")
    ys = np.array([p[1] for p in pts], dtype=np.int64)
    if n <= 3:
        chosen = list(range(n))
    else:
        last = len(ys) - 1
        chains = [list(c) + ([last] if c[-1] != last else []) for c in pseudo_pair(ys)]
        reduced = odd_run_reduce(ys, max(chains, key=len))
        if len(reduced) < n:
            raise AssertionError(f"reduced chain has {len(reduced)} < {n} points")
        chosen = list(reduced)[:n]
    drawing = path_on_points([pts[i] for i in chosen])
    drawing.points = tuple(pts)
    return drawing
