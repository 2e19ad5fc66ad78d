"""SVG rendering and a lossless JSON form of drawings."""
from __future__ import annotations

import json
from fractions import Fraction
from numbers import Integral

from .model import Drawing, OrthoEdge

_MARGIN = 20


def _num(c):
    if isinstance(c, Integral):
        return int(c)
    if isinstance(c, Fraction):
        return str(c)
    return float(c)


def _parse_num(c):
    if isinstance(c, str):
        f = Fraction(c)
        return int(f) if f.denominator == 1 else f
    return c


def export_json(d: Drawing) -> str:
    """``{"vertices": [{id, x, y}], "edges": [{from, to, bend?}]}``."""
    vertices = [{"id": w, "x": _num(p[0]), "y": _num(p[1])} for w, p in sorted(d.positions.items())]
    edges = []
    for e in d.edges:
        item = {"from": e.u, "to": e.v}
        if len(e.bends) == 1:
            item["bend"] = [_num(c) for c in e.bends[0]]
        elif e.bends:
            item["bends"] = [[_num(c) for c in b] for b in e.bends]
        edges.append(item)
    return json.dumps({"vertices": vertices, "edges": edges}, indent=1)


def import_json(text: str) -> Drawing:
    data = json.loads(text)
    positions = {v["id"]: (_parse_num(v["x"]), _parse_num(v["y"])) for v in data["vertices"]}
    edges = []
    for item in data["edges"]:
        if "bend" in item:
            bends = (tuple(_parse_num(c) for c in item["bend"]),)
        else:
            bends = tuple(tuple(_parse_num(c) for c in b) for b in item.get("bends", ()))
        edges.append(OrthoEdge(item["from"], item["to"], bends))
    return Drawing(positions, edges)


def export_svg(d: Drawing, scale: float = 10.0) -> str:
    """SVG 1.1 document; y grows upwards as in the input coordinates."""
    every = list(d.points) + list(d.positions.values())
    every += [b for e in d.edges for b in e.bends]
    if every:
        x0 = min(float(p[0]) for p in every)
        x1 = max(float(p[0]) for p in every)
        y0 = min(float(p[1]) for p in every)
        y1 = max(float(p[1]) for p in every)
    else:
        x0 = x1 = y0 = y1 = 0.0
    width = (x1 - x0) * scale + 2 * _MARGIN
    height = (y1 - y0) * scale + 2 * _MARGIN

    def xy(p):
        return (f"{(float(p[0]) - x0) * scale + _MARGIN:.2f}",
                f"{(y1 - float(p[1])) * scale + _MARGIN:.2f}")

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2f}" height="{height:.2f}">',
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]
    for e in d.edges:
        pts = " ".join(",".join(xy(p)) for p in d.polyline(e))
        out.append(f'<polyline points="{pts}"/>')
    out.append("</g>")
    used = set(d.positions.values())
    out.append('<g fill="#bbbbbb">')
    for p in d.points:
        if p not in used:
            cx, cy = xy(p)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="2"/>')
    out.append("</g>")
    out.append('<g fill="black">')
    for w, p in sorted(d.positions.items()):
        cx, cy = xy(p)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="3"><title>{w}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
