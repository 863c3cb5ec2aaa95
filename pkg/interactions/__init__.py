"""Single interactions: parsing, number-pair form, faces, joins and vertex maps"""

from .enumeration import enumerate_interactions, enumerate_shapes, label_shape
from .operations import (
    apply_vertex_map,
    check_pairs,
    face,
    faces,
    from_np,
    join,
    join_np,
    minimal_pair,
    np_face,
    order,
    to_np,
)
from .parser import parse_interaction, parse_prefix, serialize

__all__ = [
    "apply_vertex_map",
    "check_pairs",
    "enumerate_interactions",
    "enumerate_shapes",
    "face",
    "faces",
    "from_np",
    "join",
    "join_np",
    "label_shape",
    "minimal_pair",
    "np_face",
    "order",
    "parse_interaction",
    "parse_prefix",
    "serialize",
    "to_np",
]
