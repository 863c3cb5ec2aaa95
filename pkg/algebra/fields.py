"""
Coefficient fields. Rationals are the default; prime fields GF(p) are selected
with "gf:<p>". Scalars travel through the library as Fractions and are reduced
to residues when the field has a modulus.
"""

from fractions import Fraction
from typing import Any

from sympy import isprime
from sympy.polys.domains import GF, QQ

from errors import FieldError
from models import FIELD_PATTERN


class Field:
    """A sympy ground domain plus conversions to and from Fractions"""

    def __init__(self, modulus: int = 0):
        if modulus and not isprime(modulus):
            raise FieldError(f"{modulus} is not prime")
        self.modulus = modulus
        self.domain = GF(modulus) if modulus else QQ

    @property
    def name(self) -> str:
        return f"gf:{self.modulus}" if self.modulus else "rat"

    def reduce(self, value: Fraction) -> Fraction:
        """Canonical representative: the Fraction itself, or a residue in 0..p-1"""
        if not self.modulus:
            return value
        if value.denominator % self.modulus == 0:
            raise FieldError(f"{value} has no image in {self.name}")
        residue = value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
        return Fraction(residue)

    def element(self, value: Fraction) -> Any:
        if not self.modulus:
            return QQ(value.numerator, value.denominator)
        return self.domain(int(self.reduce(value)))

    def to_fraction(self, element: Any) -> Fraction:
        if not self.modulus:
            return Fraction(int(QQ.numer(element)), int(QQ.denom(element)))
        return Fraction(int(self.domain.to_int(element)) % self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"Field({self.name!r})"


RATIONALS = Field()


def parse_field(spec: "str | Field | None") -> Field:
    """Field from "rat" or "gf:<prime>"; None means rationals"""
    if spec is None:
        return RATIONALS
    if isinstance(spec, Field):
        return spec
    match = FIELD_PATTERN.fullmatch(spec.strip().lower())
    if match is None:
        raise FieldError(f"unknown field {spec!r}; use rat or gf:<prime>")
    return Field(int(match.group(1))) if match.group(1) else RATIONALS
