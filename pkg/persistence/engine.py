"""
Persistent homology through the rank function.

Omega spaces depend on which members are present, so there is no fixed
simplex order to reduce against. Instead every rank r(i, j) of
H_p(step i) -> H_p(step j) is computed exactly as dim(Z_i + B_j) - dim(B_j) in
the coordinates of the final step, and bars are recovered by inclusion-exclusion.
"""

import logging
from fractions import Fraction

from algebra import Field, span_rank
from errors import PersistenceError
from homology import HomologyEngine
from models import (
    Filtration,
    IntComplex,
    PersistenceDiagram,
    PersistencePoint,
    RankFunction,
    WeightedIntComplex,
)

from persistence.filtration import filtration_from_weights

Vector = list[Fraction]


class PersistenceEngine:
    """Rank functions and diagrams of filtrations over one field"""

    def __init__(self, field: "str | Field | None" = None):
        """
        Initialize the engine.

        Args:
            field: "rat", "gf:<prime>" or a Field; rationals when omitted
        """
        self.homology = HomologyEngine(field)
        self.field = self.homology.field
        self.log(f"Persistence engine over {self.field.name}")

    def log(self, message: str):
        """Log a message with engine context"""
        logging.info(f"[PersistenceEngine] {message}")

    def _embed(self, step: IntComplex, full: tuple, vectors: list[Vector], p: int) -> list[Vector]:
        position = {sigma: k for k, sigma in enumerate(full)}
        local = step.layer(p)
        embedded = []
        for vector in vectors:
            image = [Fraction(0)] * len(full)
            for sigma, c in zip(local, vector):
                image[position[sigma]] = c
            embedded.append(image)
        return embedded

    def _step_spaces(self, filtration: Filtration, p: int) -> tuple[list, list, int]:
        full = filtration.final.layer(p)
        cycles, boundaries = [], []
        for step in filtration.steps:
            cycles.append(self._embed(step, full, self.homology.cycles(step, p) if step.layer(p) else [], p))
            boundaries.append(
                self._embed(step, full, self.homology.boundaries(step, p), p)
            )
        return cycles, boundaries, len(full)

    def rank_function(self, filtration: Filtration, p: int) -> RankFunction:
        """Table of r(i, j) for every pair of steps i <= j"""
        cycles, boundaries, length = self._step_spaces(filtration, p)
        boundary_dims = [span_rank(b, length, self.field) for b in boundaries]
        table = {}
        n = len(filtration)
        for i in range(n):
            for j in range(i, n):
                joint = span_rank(cycles[i] + boundaries[j], length, self.field)
                table[(i, j)] = joint - boundary_dims[j]
        self.log(f"Rank function in degree {p} over {n} steps")
        return RankFunction(degree=p, values=filtration.values, table=table)

    def persistent_rank(self, filtration: Filtration, p: int, i: int, j: int) -> int:
        n = len(filtration)
        if not 0 <= i <= j < n:
            raise IndexError(f"step indices ({i}, {j}) outside 0..{n - 1} with i <= j")
        cycles, boundaries, length = self._step_spaces(filtration, p)
        joint = span_rank(cycles[i] + boundaries[j], length, self.field)
        return joint - span_rank(boundaries[j], length, self.field)

    def diagram(self, filtration: Filtration, p: int, ranks: RankFunction | None = None) -> PersistenceDiagram:
        """
        Bars by inclusion-exclusion on the rank function.

        Raises:
            PersistenceError: some multiplicity is negative
        """
        r = ranks or self.rank_function(filtration, p)
        values = filtration.values
        n = len(filtration)
        points = []
        for i in range(n):
            for j in range(i + 1, n):
                mu = r.rank(i, j - 1) - r.rank(i, j) - r.rank(i - 1, j - 1) + r.rank(i - 1, j)
                if mu < 0:
                    raise PersistenceError(
                        f"negative multiplicity {mu} for [{values[i]}, {values[j]}) in degree {p}"
                    )
                points.extend([PersistencePoint(birth=values[i], death=values[j])] * mu)
            essential = r.rank(i, n - 1) - r.rank(i - 1, n - 1)
            if essential < 0:
                raise PersistenceError(f"negative essential multiplicity at {values[i]} in degree {p}")
            points.extend([PersistencePoint(birth=values[i])] * essential)
        return PersistenceDiagram(degree=p, points=tuple(points))

    def diagrams(self, filtration: Filtration, degrees: list[int]) -> list[PersistenceDiagram]:
        return [self.diagram(filtration, p) for p in degrees]

    def weighted_diagrams(
        self, weighted: WeightedIntComplex, max_dim: int | None = None
    ) -> list[PersistenceDiagram]:
        """Diagrams of the sublevel filtration in degrees 1..max_dim"""
        filtration = filtration_from_weights(weighted)
        top = max_dim if max_dim is not None else weighted.complex.max_order
        return self.diagrams(filtration, list(range(1, top + 1)))
