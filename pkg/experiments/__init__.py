"""Digraph catalog and the homology distinguishability experiment"""

from .digraphs import (
    AUGMENTATION_TEXTS,
    EXPECTED_CENSUS,
    augmentation_set,
    canonical_arcs,
    catalog,
    census,
    digraph_complex,
    relabel_arcs,
)
from .distinguish import (
    AUGMENTED_CLAIM,
    PLAIN_CLAIM,
    ExperimentRunner,
    equivalence_classes,
    render_report,
    report_to_dict,
)

__all__ = [
    "AUGMENTATION_TEXTS",
    "AUGMENTED_CLAIM",
    "EXPECTED_CENSUS",
    "ExperimentRunner",
    "PLAIN_CLAIM",
    "augmentation_set",
    "canonical_arcs",
    "catalog",
    "census",
    "digraph_complex",
    "equivalence_classes",
    "relabel_arcs",
    "render_report",
    "report_to_dict",
]
