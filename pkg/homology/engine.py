"""
Homology engine: chain spaces, betti numbers, layer and multilayer homology,
cycle representatives and induced maps.
"""

import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction

from algebra import Field, independent_extension, kernel_basis, parse_field, solve_in_span, span_rank
from complexes import collapse, is_elementary, layer_graph, map_complex, subset_graph
from errors import ComplexError, VertexMapError
from interactions import apply_vertex_map
from interactions.operations import VertexMap
from models import (
    ChainSpaces,
    CollapseAudit,
    FormalChain,
    FreePair,
    IntComplex,
    Interaction,
    Matrix,
    Signature,
)

from homology.chains import boundary_terms, chain_from_vector

Vector = list[Fraction]


class HomologyEngine:
    """
    Computes homology of IntComplexes over one coefficient field.

    For each degree p the generators of A_p are the members of layer p. The
    boundary matrix maps them into the span of layer p-1 together with every
    face of layer p; Omega_p is the kernel of the rows that fall outside layer
    p-1. Cycles are the kernel of the full matrix, which already lies inside
    Omega_p.
    """

    def __init__(self, field: "str | Field | None" = None):
        """
        Initialize the engine.

        Args:
            field: "rat", "gf:<prime>" or a Field; rationals when omitted
        """
        self.field: Field = parse_field(field)
        self.log(f"Homology engine over {self.field.name}")

    def log(self, message: str):
        """Log a message with engine context"""
        logging.info(f"[HomologyEngine] {message}")

    def chain_spaces(self, complex_: IntComplex, p: int) -> ChainSpaces:
        """Generators, ambient faces, boundary matrix and Omega basis in degree p"""
        generators = complex_.layer(p)
        if p == 1 or not generators:
            omega = [[Fraction(int(i == j)) for j in range(len(generators))] for i in range(len(generators))]
            return ChainSpaces(
                degree=p,
                generators=generators,
                ambient=(),
                boundary_matrix=Matrix(rows=0, cols=len(generators), entries=()),
                omega=tuple(tuple(v) for v in omega),
            )
        columns = [boundary_terms(sigma) for sigma in generators]
        lower = set(complex_.layer(p - 1))
        ambient = sorted(lower.union(*(column.keys() for column in columns)), key=Interaction.sort_key)
        entries = [
            [self.field.reduce(Fraction(column.get(row, 0))) for column in columns] for row in ambient
        ]
        outside = [entries[i] for i, row in enumerate(ambient) if row not in lower]
        omega = kernel_basis(outside, self.field, cols=len(generators))
        return ChainSpaces(
            degree=p,
            generators=generators,
            ambient=tuple(ambient),
            boundary_matrix=Matrix(rows=len(ambient), cols=len(generators), entries=entries),
            omega=tuple(tuple(v) for v in omega),
        )

    def omega_basis(self, complex_: IntComplex, p: int) -> list[FormalChain]:
        spaces = self.chain_spaces(complex_, p)
        return [
            chain_from_vector(spaces.generators, list(v), p, self.field.modulus) for v in spaces.omega
        ]

    def cycles(self, complex_: IntComplex, p: int) -> list[Vector]:
        """Basis of Z_p in the coordinates of layer p"""
        spaces = self.chain_spaces(complex_, p)
        if p == 1:
            return [list(v) for v in spaces.omega]
        return kernel_basis(spaces.boundary_matrix, self.field)

    def boundaries(self, complex_: IntComplex, p: int) -> list[Vector]:
        """Spanning set of B_p, the boundary of Omega_{p+1}, in layer-p coordinates"""
        generators = complex_.layer(p)
        upper = self.chain_spaces(complex_, p + 1)
        if not generators or not upper.omega:
            return []
        row_of = {sigma: i for i, sigma in enumerate(upper.ambient)}
        rows = [upper.boundary_matrix.entries[row_of[sigma]] for sigma in generators]
        images = []
        for omega in upper.omega:
            image = [
                self.field.reduce(sum((a * b for a, b in zip(row, omega)), Fraction(0))) for row in rows
            ]
            images.append(image)
        return images

    def betti(self, complex_: IntComplex, p: int) -> int:
        """dim Z_p - dim B_p"""
        if p < 1:
            return 0
        generators = complex_.layer(p)
        if not generators:
            return 0
        z = len(self.cycles(complex_, p))
        b = span_rank(self.boundaries(complex_, p), len(generators), self.field)
        return z - b

    def betti_profile(self, complex_: IntComplex, max_dim: int | None = None) -> tuple[int, ...]:
        """Betti numbers from degree 1 to max_dim, or to the top nonempty layer"""
        top = max_dim if max_dim is not None else complex_.max_order
        return tuple(self.betti(complex_, p) for p in range(1, top + 1))

    def layer_betti(self, complex_: IntComplex, p: int) -> tuple[int, int] | None:
        """
        Betti numbers in degrees 1 and 2 of the layer graph G_p.

        Returns:
            None for p = 1, where layer homology is undefined
        """
        if p == 1:
            return None
        graph = layer_graph(complex_, p)
        return self.betti(graph, 1), self.betti(graph, 2)

    def layer_profile(self, complex_: IntComplex, max_dim: int | None = None) -> dict[int, tuple[int, int]]:
        return {
            p: self.layer_betti(complex_, p)
            for p in sorted(complex_.layers)
            if p >= 2 and (max_dim is None or p <= max_dim)
        }

    def multilayer_betti(
        self, complex_: IntComplex, subset: Iterable[Interaction] | None = None
    ) -> int:
        """Dimension of the degree-2 homology of the subset graph G_S"""
        return self.betti(subset_graph(complex_, subset), 2)

    def signature(self, complex_: IntComplex, max_dim: int | None = None) -> Signature:
        return Signature(
            betti=self.betti_profile(complex_, max_dim),
            layer_betti=self.layer_profile(complex_, max_dim),
        )

    def _representative_vectors(self, complex_: IntComplex, p: int) -> list[Vector]:
        generators = complex_.layer(p)
        if not generators:
            return []
        return independent_extension(
            self.boundaries(complex_, p), self.cycles(complex_, p), len(generators), self.field
        )

    def cycle_representatives(self, complex_: IntComplex, p: int) -> list[FormalChain]:
        """Cycles whose classes form a basis of H_p"""
        generators = complex_.layer(p)
        return [
            chain_from_vector(generators, v, p, self.field.modulus)
            for v in self._representative_vectors(complex_, p)
        ]

    def image_complex(self, complex_: IntComplex, f: VertexMap) -> IntComplex:
        return map_complex(complex_, f)

    def induced_map(
        self,
        f: VertexMap | None,
        source: IntComplex,
        target: IntComplex,
        p: int,
    ) -> Matrix:
        """
        Matrix of f_# on H_p in the cycle-representative bases.

        Args:
            f: Vertex map, or None for the inclusion of source into target

        Raises:
            VertexMapError: some member of source has its image outside target
        """
        f = f if f is not None else (lambda label: label)
        for sigma in source.members():
            if apply_vertex_map(sigma, f) not in target:
                raise VertexMapError(f"image of {sigma.text} is not a member of the target")
        source_generators = source.layer(p)
        target_generators = target.layer(p)
        index = {sigma: i for i, sigma in enumerate(target_generators)}
        target_boundaries = independent_extension(
            [], self.boundaries(target, p), len(target_generators), self.field
        )
        target_reps = self._representative_vectors(target, p)
        basis = target_boundaries + target_reps
        columns = []
        for rep in self._representative_vectors(source, p):
            image = [Fraction(0)] * len(target_generators)
            for sigma, coefficient in zip(source_generators, rep):
                if coefficient:
                    k = index[apply_vertex_map(sigma, f)]
                    image[k] = self.field.reduce(image[k] + coefficient)
            coordinates = solve_in_span(basis, image, self.field)
            if coordinates is None:
                raise VertexMapError("image of a cycle is not a cycle of the target")
            columns.append(coordinates[len(target_boundaries) :])
        self.log(f"Induced map in degree {p}: {len(columns)} -> {len(target_reps)}")
        return Matrix.from_columns(columns, rows=len(target_reps))

    def audit_collapse(self, complex_: IntComplex, pair: FreePair) -> CollapseAudit:
        """Compare betti profiles across one collapse and classify the pair"""
        collapsed = collapse(complex_, pair)
        top = complex_.max_order
        audit = CollapseAudit(
            pair=pair,
            before=self.betti_profile(complex_, top),
            after=self.betti_profile(collapsed, top),
            elementary=is_elementary(complex_, pair),
        )
        if not audit.invariant:
            logging.warning(
                f"[HomologyEngine] collapse of {pair} changes betti {audit.before} -> {audit.after}"
            )
        return audit

    def field_agreement(
        self, complex_: IntComplex, fields: Sequence["str | Field"]
    ) -> dict[str, tuple[int, ...]]:
        """Betti profiles under several fields; disagreements are logged"""
        profiles = {}
        for choice in fields:
            engine = HomologyEngine(choice)
            profiles[engine.field.name] = engine.betti_profile(complex_)
        if len(set(profiles.values())) > 1:
            logging.warning(f"[HomologyEngine] fields disagree: {profiles}")
        return profiles


def layer_betti_or_empty(engine: HomologyEngine, complex_: IntComplex, p: int) -> tuple[int, int]:
    """Layer betti pair, with (0, 0) for an empty layer as the printed tables show"""
    try:
        pair = engine.layer_betti(complex_, p)
    except ComplexError:
        return (0, 0)
    return pair if pair is not None else (0, 0)
