"""IntComplex construction, derived graphs, collapses, generators and file I/O"""

from .generators import (
    cycle_complex,
    digraph_to_complex,
    face_closure,
    perturb_weights,
    random_complex,
    random_weighted_complex,
    random_weights,
)
from .io import (
    format_complex_text,
    format_weight,
    parse_complex_text,
    parse_subset_text,
    read_complex_file,
    read_subset_file,
)
from .operations import (
    build_complex,
    collapse,
    connected_components,
    daughter_vertex,
    default_subset,
    disjoint_union,
    face_coefficient,
    free_pairs,
    is_elementary,
    is_subcomplex,
    layer,
    layer_graph,
    lint_complex,
    map_complex,
    subset_graph,
)

__all__ = [
    "build_complex",
    "collapse",
    "connected_components",
    "cycle_complex",
    "daughter_vertex",
    "default_subset",
    "digraph_to_complex",
    "disjoint_union",
    "face_closure",
    "face_coefficient",
    "format_complex_text",
    "format_weight",
    "free_pairs",
    "is_elementary",
    "is_subcomplex",
    "layer",
    "layer_graph",
    "lint_complex",
    "map_complex",
    "parse_complex_text",
    "parse_subset_text",
    "perturb_weights",
    "random_complex",
    "random_weighted_complex",
    "random_weights",
    "read_complex_file",
    "read_subset_file",
    "subset_graph",
]
