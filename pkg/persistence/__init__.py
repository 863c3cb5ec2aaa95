"""Filtrations, persistent homology, bottleneck distance and barcodes"""

from .bottleneck import bottleneck, delta_matching_exists, diagonal_cost, point_cost
from .engine import PersistenceEngine
from .filtration import filtration_from_weights, layer_filtration, layer_weights
from .render import (
    barcode_render,
    diagram_from_dict,
    diagram_from_json,
    diagram_to_dict,
    render_diagrams,
    render_svg,
    render_text,
)

__all__ = [
    "PersistenceEngine",
    "barcode_render",
    "bottleneck",
    "delta_matching_exists",
    "diagonal_cost",
    "diagram_from_dict",
    "diagram_from_json",
    "diagram_to_dict",
    "filtration_from_weights",
    "layer_filtration",
    "layer_weights",
    "point_cost",
    "render_diagrams",
    "render_svg",
    "render_text",
]
