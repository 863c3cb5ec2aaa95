"""
Data models for the IntComplex library.
"""

import json
import re
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator
from sympy import isprime

VERTEX_PATTERN = re.compile(r"[A-Za-z0-9_]+")
FIELD_PATTERN = re.compile(r"rat|gf:(\d+)")


def is_vertex_label(label: str) -> bool:
    """Vertex tokens, or the serialized daughter labels used by layer graphs"""
    if VERTEX_PATTERN.fullmatch(label):
        return True
    return label.startswith("(") and label.endswith(")") and not any(c.isspace() for c in label)


def to_fraction(value: Any) -> Fraction:
    """Exact conversion; floats go through their shortest decimal form"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not weights")
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


class OutputFormat(str, Enum):
    """Report formats understood by the renderers"""

    TEXT = "text"
    JSON = "json"
    SVG = "svg"


class Interaction(BaseModel):
    """
    A leaf-labelled proper binary tree.

    Leaves carry a vertex label; an internal node is the ordered pair of its left
    and right daughters. Equality and hashing go through the canonical key, so an
    opaque daughter label such as "(1,2)" never equals the node (1,2).
    """

    model_config = ConfigDict(frozen=True)

    vertex: Optional[str] = None
    left: Optional["Interaction"] = None
    right: Optional["Interaction"] = None

    _text: str = PrivateAttr(default="")
    _key: str = PrivateAttr(default="")
    _order: int = PrivateAttr(default=1)

    @field_validator("vertex")
    @classmethod
    def _check_vertex(cls, value: str | None) -> str | None:
        if value is not None and not is_vertex_label(value):
            raise ValueError(f"invalid vertex label {value!r}")
        return value

    def model_post_init(self, __context: Any) -> None:
        if self.vertex is not None:
            if self.left is not None or self.right is not None:
                raise ValueError("a vertex has no daughters")
            self._text = self.vertex
            self._key = f"[{self.vertex}]" if self.vertex.startswith("(") else self.vertex
            self._order = 1
            return
        if self.left is None or self.right is None:
            raise ValueError("an interaction node needs two daughters")
        self._text = f"({self.left._text},{self.right._text})"
        self._key = f"({self.left._key},{self.right._key})"
        self._order = self.left._order + self.right._order

    @classmethod
    def leaf(cls, label: str) -> "Interaction":
        return cls(vertex=str(label))

    @classmethod
    def node(cls, left: "Interaction", right: "Interaction") -> "Interaction":
        return cls(left=left, right=right)

    @property
    def text(self) -> str:
        """Canonical fully parenthesized form"""
        return self._text

    @property
    def key(self) -> str:
        return self._key

    @property
    def order(self) -> int:
        return self._order

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    def leaves(self) -> list[str]:
        """Vertex labels left to right"""
        if self.vertex is not None:
            return [self.vertex]
        return self.left.leaves() + self.right.leaves()

    def sort_key(self) -> tuple[str, str]:
        return (self._text, self._key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interaction):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        return self._text

    def __repr__(self) -> str:
        return f"Interaction({self._text!r})"


class NPRep(BaseModel):
    """Number-pair form: leaves left to right plus one gap pair per bracket"""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[str, ...]
    pairs: tuple[tuple[int, int], ...] = ()

    def pair_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.pairs)


class IntComplex(BaseModel):
    """
    A nonempty finite collection of interactions grouped into layers.

    Layer p holds the members of order p, sorted by canonical text. Faces and
    daughters of members are not required to be members.
    """

    model_config = ConfigDict(frozen=True)

    layers: dict[int, tuple[Interaction, ...]]

    @field_validator("layers")
    @classmethod
    def _check_layers(cls, layers: dict[int, tuple[Interaction, ...]]):
        normalized: dict[int, tuple[Interaction, ...]] = {}
        for p in sorted(layers):
            members = layers[p]
            if p < 1:
                raise ValueError(f"layer index {p} must be positive")
            for sigma in members:
                if sigma.order != p:
                    raise ValueError(f"{sigma.text} has order {sigma.order}, stored in layer {p}")
            if len(set(members)) != len(members):
                raise ValueError(f"duplicate interactions in layer {p}")
            if members:
                normalized[p] = tuple(sorted(members, key=Interaction.sort_key))
        if not normalized:
            raise ValueError("an IntComplex needs at least one interaction")
        return normalized

    def layer(self, p: int) -> tuple[Interaction, ...]:
        return self.layers.get(p, ())

    @property
    def vertices(self) -> tuple[Interaction, ...]:
        return self.layer(1)

    @property
    def max_order(self) -> int:
        return max(self.layers)

    def members(self) -> list[Interaction]:
        return [sigma for p in sorted(self.layers) for sigma in self.layers[p]]

    def labels(self) -> set[str]:
        """Every vertex label used anywhere in the complex"""
        return {label for sigma in self.members() for label in sigma.leaves()}

    def __contains__(self, sigma: object) -> bool:
        return isinstance(sigma, Interaction) and sigma in self.layers.get(sigma.order, ())

    def __len__(self) -> int:
        return sum(len(members) for members in self.layers.values())


class WeightedIntComplex(BaseModel):
    """The pair (I, f): a complex with an exact weight on every member"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    complex: IntComplex
    weights: dict[Interaction, Fraction]

    @field_validator("weights", mode="before")
    @classmethod
    def _exact_weights(cls, weights: dict):
        return {sigma: to_fraction(value) for sigma, value in weights.items()}

    @model_validator(mode="after")
    def _check_total(self):
        members = set(self.complex.members())
        missing = [sigma.text for sigma in members if sigma not in self.weights]
        if missing:
            raise ValueError(f"no weight for {', '.join(sorted(missing))}")
        extra = [sigma.text for sigma in self.weights if sigma not in members]
        if extra:
            raise ValueError(f"weights for non-members {', '.join(sorted(extra))}")
        return self

    def weight(self, sigma: Interaction) -> Fraction:
        return self.weights[sigma]


class FreePair(BaseModel):
    """A face sigma of tau that is a face of no other member of tau's layer"""

    model_config = ConfigDict(frozen=True)

    sigma: Interaction
    tau: Interaction

    @model_validator(mode="after")
    def _check_orders(self):
        if self.tau.order != self.sigma.order + 1:
            raise ValueError("tau must have order one more than sigma")
        return self

    def __str__(self) -> str:
        return f"({self.sigma.text} < {self.tau.text})"


class FormalChain(BaseModel):
    """
    Finite linear combination of interactions of one order.

    Coefficients are exact rationals; with a nonzero modulus they are kept
    reduced to residues. Zero terms are never stored.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    terms: dict[Interaction, Fraction] = Field(default_factory=dict)
    degree: int
    modulus: int = 0

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any):
        if not isinstance(data, dict):
            return data
        modulus = data.get("modulus", 0) or 0
        terms: dict[Interaction, Fraction] = {}
        for sigma, value in dict(data.get("terms", {})).items():
            coefficient = to_fraction(value)
            if modulus:
                coefficient = Fraction(
                    coefficient.numerator * pow(coefficient.denominator, -1, modulus) % modulus
                )
            if coefficient:
                terms[sigma] = coefficient
        return {**data, "terms": terms, "modulus": modulus}

    @model_validator(mode="after")
    def _check_degree(self):
        for sigma in self.terms:
            if sigma.order != self.degree:
                raise ValueError(f"{sigma.text} does not have order {self.degree}")
        return self

    @classmethod
    def zero(cls, degree: int, modulus: int = 0) -> "FormalChain":
        return cls(terms={}, degree=degree, modulus=modulus)

    @classmethod
    def of(cls, sigma: Interaction, coefficient: Any = 1, modulus: int = 0) -> "FormalChain":
        return cls(terms={sigma: coefficient}, degree=sigma.order, modulus=modulus)

    def coefficient(self, sigma: Interaction) -> Fraction:
        return self.terms.get(sigma, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Interaction]:
        return sorted(self.terms, key=Interaction.sort_key)

    def scale(self, factor: Any) -> "FormalChain":
        factor = to_fraction(factor)
        return FormalChain(
            terms={sigma: c * factor for sigma, c in self.terms.items()},
            degree=self.degree,
            modulus=self.modulus,
        )

    def __add__(self, other: "FormalChain") -> "FormalChain":
        if other.degree != self.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError("cannot add chains of different degree")
        terms = dict(self.terms)
        for sigma, c in other.terms.items():
            terms[sigma] = terms.get(sigma, Fraction(0)) + c
        degree = self.degree if not self.is_zero() else other.degree
        return FormalChain(terms=terms, degree=degree, modulus=self.modulus or other.modulus)

    def __sub__(self, other: "FormalChain") -> "FormalChain":
        return self + other.scale(-1)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for sigma in self.support():
            c = self.terms[sigma]
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            body = sigma.text if magnitude == 1 else f"{magnitude}*{sigma.text}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


class Matrix(BaseModel):
    """Dense matrix with exact entries"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _exact_entries(cls, data: Any):
        if isinstance(data, dict) and "entries" in data:
            entries = tuple(tuple(to_fraction(x) for x in row) for row in data["entries"])
            return {**data, "entries": entries}
        return data

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        return self

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(
            rows=n,
            cols=n,
            entries=[[Fraction(int(i == j)) for j in range(n)] for i in range(n)],
        )

    @classmethod
    def from_columns(cls, columns: list[list[Fraction]], rows: int) -> "Matrix":
        return cls(
            rows=rows,
            cols=len(columns),
            entries=[[column[i] for column in columns] for i in range(rows)],
        )

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.entries]

    def matmul(self, other: "Matrix", modulus: int = 0) -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not agree")
        entries = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                value = sum(
                    (self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                    Fraction(0),
                )
                if modulus:
                    value = Fraction(value.numerator * pow(value.denominator, -1, modulus) % modulus)
                row.append(value)
            entries.append(row)
        return Matrix(rows=self.rows, cols=other.cols, entries=entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.matmul(other)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)


class ChainSpaces(BaseModel):
    """Bases and boundary matrix for one degree of a complex"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree: int
    generators: tuple[Interaction, ...]
    ambient: tuple[Interaction, ...]
    boundary_matrix: Matrix
    omega: tuple[tuple[Fraction, ...], ...]

    @property
    def omega_dim(self) -> int:
        return len(self.omega)


class Signature(BaseModel):
    """Betti numbers from degree 1 upward plus layer-betti pairs by layer"""

    model_config = ConfigDict(frozen=True)

    betti: tuple[int, ...]
    layer_betti: dict[int, tuple[int, int]] = Field(default_factory=dict)

    @field_validator("betti")
    @classmethod
    def _nonnegative(cls, betti: tuple[int, ...]):
        if any(b < 0 for b in betti):
            raise ValueError("betti numbers are nonnegative")
        return betti

    def as_dict(self) -> dict[str, Any]:
        return {
            "betti": list(self.betti),
            "layer": {str(p): list(self.layer_betti[p]) for p in sorted(self.layer_betti)},
        }

    def to_json(self) -> str:
        """Canonical compact form, also used as the equality key"""
        return json.dumps(self.as_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Signature":
        return cls(
            betti=tuple(data["betti"]),
            layer_betti={int(p): tuple(pair) for p, pair in data.get("layer", {}).items()},
        )


class CollapseAudit(BaseModel):
    """Betti profiles on both sides of one collapse"""

    model_config = ConfigDict(frozen=True)

    pair: FreePair
    before: tuple[int, ...]
    after: tuple[int, ...]
    elementary: bool

    @property
    def invariant(self) -> bool:
        width = max(len(self.before), len(self.after))
        padded_before = self.before + (0,) * (width - len(self.before))
        padded_after = self.after + (0,) * (width - len(self.after))
        return padded_before == padded_after


class PersistencePoint(BaseModel):
    """A bar [birth, death); death None marks an essential class"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    birth: Fraction
    death: Optional[Fraction] = None

    @field_validator("birth", "death", mode="before")
    @classmethod
    def _exact(cls, value: Any):
        return None if value is None else to_fraction(value)

    @model_validator(mode="after")
    def _check_order(self):
        if self.death is not None and not self.birth < self.death:
            raise ValueError(f"birth {self.birth} must precede death {self.death}")
        return self

    @property
    def is_essential(self) -> bool:
        return self.death is None

    @property
    def persistence(self) -> Fraction | None:
        return None if self.death is None else self.death - self.birth

    def sort_key(self) -> tuple:
        return (self.birth, self.death is None, self.death or Fraction(0))


class PersistenceDiagram(BaseModel):
    """Multiset of bars in one homology degree, kept sorted"""

    model_config = ConfigDict(frozen=True)

    degree: int
    points: tuple[PersistencePoint, ...] = ()

    @field_validator("points")
    @classmethod
    def _sorted(cls, points: tuple[PersistencePoint, ...]):
        return tuple(sorted(points, key=PersistencePoint.sort_key))

    def finite(self) -> list[PersistencePoint]:
        return [point for point in self.points if not point.is_essential]

    def essential(self) -> list[PersistencePoint]:
        return [point for point in self.points if point.is_essential]

    def __len__(self) -> int:
        return len(self.points)


class Filtration(BaseModel):
    """Nested complexes indexed by strictly increasing critical values"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    steps: tuple[IntComplex, ...]
    values: tuple[Fraction, ...]

    @model_validator(mode="after")
    def _check_nested(self):
        if not self.steps or len(self.steps) != len(self.values):
            raise ValueError("a filtration needs one value per step")
        for k in range(len(self.values) - 1):
            if not self.values[k] < self.values[k + 1]:
                raise ValueError("filtration values must increase strictly")
            current, following = self.steps[k], self.steps[k + 1]
            if any(sigma not in following for sigma in current.members()):
                raise ValueError(f"step {k} is not a subcomplex of step {k + 1}")
        return self

    def step_index(self, value: Any) -> int:
        """Index of the last step whose value does not exceed the given weight"""
        value = to_fraction(value)
        if value < self.values[0]:
            raise ValueError(f"{value} precedes the first step")
        index = 0
        for k, step_value in enumerate(self.values):
            if step_value <= value:
                index = k
        return index

    @property
    def final(self) -> IntComplex:
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.steps)


class RankFunction(BaseModel):
    """Ranks r(i, j) of the maps H_p(step i) -> H_p(step j) for i <= j"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree: int
    values: tuple[Fraction, ...]
    table: dict[tuple[int, int], int]

    def rank(self, i: int, j: int) -> int:
        """Rank with the convention that index -1 is the empty step"""
        if i < 0:
            return 0
        return self.table[(i, j)]

    @property
    def size(self) -> int:
        return len(self.values)


class Digraph(BaseModel):
    """A named simple digraph used by the distinguishability experiment"""

    model_config = ConfigDict(frozen=True)

    name: str
    vertices: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]

    @property
    def arrow_count(self) -> int:
        return len(self.arcs)

    @property
    def mutual_pairs(self) -> int:
        arcs = set(self.arcs)
        return sum(1 for u, v in arcs if (v, u) in arcs) // 2


class ClaimVerdict(BaseModel):
    """Outcome of checking one distinguishability claim"""

    claim: str
    holds: bool
    detail: str = ""


class DistinguishabilityReport(BaseModel):
    """Signatures and equivalence classes before and after augmentation"""

    model_config = ConfigDict(frozen=True)

    field: str
    plain: dict[str, Signature]
    plain_classes: list[list[str]]
    augmented: Optional[dict[str, Signature]] = None
    augmented_classes: Optional[list[list[str]]] = None
    verdicts: list[ClaimVerdict] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(verdict.holds for verdict in self.verdicts)


class EngineSettings(BaseModel):
    """Overall engine settings"""

    field: str = "rat"
    max_dim: int | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    log_level: str = "WARNING"
    barcode_width: int = 40

    @field_validator("field")
    @classmethod
    def _check_field(cls, value: str) -> str:
        value = value.strip().lower()
        match = FIELD_PATTERN.fullmatch(value)
        if not match or (match.group(1) and not isprime(int(match.group(1)))):
            raise ValueError(f"unknown field {value!r}; use rat or gf:<prime>")
        return value

    @field_validator("max_dim")
    @classmethod
    def _check_max_dim(cls, value: int | None) -> int | None:
        if value is not None and value < 1:
            raise ValueError("max_dim must be at least 1")
        return value
