"""Orthogonal point-set drawings of paths and top-view caterpillars."""
from .caterpillar import IterationStats, draw_caterpillar
from .export import export_json, export_svg, import_json
from .model import Drawing, OrthoEdge, PathGraph, TopViewCaterpillar
from .path import odd_run_reduce, straight_through_path
from .validate import ValidationReport, validate_drawing

__all__ = [
    "Drawing", "OrthoEdge", "PathGraph", "TopViewCaterpillar", "IterationStats",
    "draw_caterpillar", "straight_through_path", "odd_run_reduce",
    "validate_drawing", "ValidationReport", "export_svg", "export_json", "import_json",
]
