"""Boundary operator, chain spaces and homology of IntComplexes"""

from .chains import (
    boundary,
    boundary_chain,
    boundary_terms,
    chain_from_vector,
    join_chains,
    map_chain,
    vector_from_chain,
)
from .engine import HomologyEngine, layer_betti_or_empty

__all__ = [
    "HomologyEngine",
    "boundary",
    "boundary_chain",
    "boundary_terms",
    "chain_from_vector",
    "join_chains",
    "layer_betti_or_empty",
    "map_chain",
    "vector_from_chain",
]
