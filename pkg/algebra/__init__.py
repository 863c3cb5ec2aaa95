"""Exact linear algebra over the rationals and prime fields"""

from .fields import RATIONALS, Field, parse_field
from .linalg import (
    SubspaceDims,
    independent_extension,
    kernel_basis,
    mat_vec,
    rank,
    rref,
    solve_in_span,
    span_rank,
    subspace_dims,
)

__all__ = [
    "RATIONALS",
    "Field",
    "SubspaceDims",
    "independent_extension",
    "kernel_basis",
    "mat_vec",
    "parse_field",
    "rank",
    "rref",
    "solve_in_span",
    "span_rank",
    "subspace_dims",
]
