"""Trees to draw and the drawing record itself."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import BadCaterpillar, PreconditionError

LEFT = 0
RIGHT = 1


@dataclass(frozen=True)
class OrthoEdge:
    """Edge ``u``-``v`` drawn as the polyline ``pos(u), *bends, pos(v)``."""

    u: int
    v: int
    bends: tuple = ()

    @property
    def bend(self):
        return self.bends[0] if len(self.bends) == 1 else None


@dataclass
class Drawing:
    """Vertex positions plus one polyline per edge.

    ``points`` optionally keeps the whole input point set so exports can show
    the unused points too.
    """

    positions: dict
    edges: list
    points: tuple = field(default=(), compare=False)

    def polyline(self, e: OrthoEdge) -> list:
        return [self.positions[e.u], *e.bends, self.positions[e.v]]


@dataclass(frozen=True)
class PathGraph:
    """The path ``0 - 1 - ... - (n-1)``."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise PreconditionError("a path needs at least 2 vertices")

    @property
    def spine(self) -> tuple:
        return tuple(range(self.n))

    @property
    def leaves(self) -> dict:
        return {}

    def edges(self) -> list:
        return [(i, i + 1) for i in range(self.n - 1)]


@dataclass(frozen=True)
class TopViewCaterpillar:
    """Spine ``v_1 .. v_s`` (ids ``0 .. s-1``); every interior spine vertex
    carries one leaf on each side of the spine.

    The leaves of ``v_j`` (``2 <= j <= s-1``) have ids ``s + 2(j-2)`` (left
    of the direction of travel along the spine) and ``s + 2(j-2) + 1``
    (right), so the tree has ``n = 3s - 4`` vertices.
    """

    spine_len: int

    def __post_init__(self):
        if self.spine_len < 2:
            raise BadCaterpillar("the spine needs at least 2 vertices")

    @classmethod
    def from_vertex_count(cls, n: int) -> "TopViewCaterpillar":
        if n < 2 or n % 3 != 2:
            raise BadCaterpillar(f"a top-view caterpillar has n = 2 (mod 3) vertices, got {n}")
        return cls((n + 4) // 3)

    @property
    def n(self) -> int:
        return 3 * self.spine_len - 4

    @property
    def spine(self) -> tuple:
        return tuple(range(self.spine_len))

    def leaf_id(self, j: int, side: int) -> int:
        """Leaf of the ``j``-th spine vertex (1-based) on ``side``."""
        if not 2 <= j <= self.spine_len - 1:
            raise IndexError(f"spine vertex {j} has no leaves")
        return self.spine_len + 2 * (j - 2) + side

    @property
    def leaves(self) -> dict:
        """``leaf id -> (spine vertex id, side)``."""
        return {
            self.leaf_id(j, side): (j - 1, side)
            for j in range(2, self.spine_len)
            for side in (LEFT, RIGHT)
        }

    def edges(self) -> list:
        out = [(i, i + 1) for i in range(self.spine_len - 1)]
        out += [(hub, leaf) for leaf, (hub, _) in self.leaves.items()]
        return out
