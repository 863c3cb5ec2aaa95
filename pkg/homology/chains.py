"""
Formal chains and the boundary operator.

The boundary of an n-interaction is the alternating sum of its faces; a
1-interaction has zero boundary because the chain space below degree 1 is zero.
"""

from fractions import Fraction

from interactions import apply_vertex_map, faces, join
from interactions.operations import VertexMap
from models import FormalChain, Interaction


def boundary_terms(sigma: Interaction) -> dict[Interaction, int]:
    """Integer coefficients of the boundary, coinciding faces already combined"""
    terms: dict[Interaction, int] = {}
    if sigma.order < 2:
        return terms
    for index, face in enumerate(faces(sigma)):
        terms[face] = terms.get(face, 0) + (1 if index % 2 == 0 else -1)
    return {face: c for face, c in terms.items() if c}


def boundary(sigma: Interaction, modulus: int = 0) -> FormalChain:
    return FormalChain(terms=boundary_terms(sigma), degree=max(sigma.order - 1, 0), modulus=modulus)


def boundary_chain(chain: FormalChain) -> FormalChain:
    """Linear extension of the boundary operator"""
    terms: dict[Interaction, Fraction] = {}
    for sigma, coefficient in chain.terms.items():
        for face, c in boundary_terms(sigma).items():
            terms[face] = terms.get(face, Fraction(0)) + coefficient * c
    return FormalChain(terms=terms, degree=max(chain.degree - 1, 0), modulus=chain.modulus)


def join_chains(left: FormalChain, right: FormalChain) -> FormalChain:
    """Bilinear extension of the join"""
    terms: dict[Interaction, Fraction] = {}
    for sigma, a in left.terms.items():
        for tau, b in right.terms.items():
            joined = join(sigma, tau)
            terms[joined] = terms.get(joined, Fraction(0)) + a * b
    return FormalChain(
        terms=terms,
        degree=left.degree + right.degree,
        modulus=left.modulus or right.modulus,
    )


def map_chain(chain: FormalChain, f: VertexMap) -> FormalChain:
    """Push a chain forward along a vertex map"""
    terms: dict[Interaction, Fraction] = {}
    for sigma, coefficient in chain.terms.items():
        image = apply_vertex_map(sigma, f)
        terms[image] = terms.get(image, Fraction(0)) + coefficient
    return FormalChain(terms=terms, degree=chain.degree, modulus=chain.modulus)


def chain_from_vector(
    generators: tuple[Interaction, ...] | list[Interaction],
    vector: list[Fraction],
    degree: int,
    modulus: int = 0,
) -> FormalChain:
    terms = {sigma: c for sigma, c in zip(generators, vector) if c}
    return FormalChain(terms=terms, degree=degree, modulus=modulus)


def vector_from_chain(generators: tuple[Interaction, ...] | list[Interaction], chain: FormalChain) -> list[Fraction]:
    index = {sigma: i for i, sigma in enumerate(generators)}
    vector = [Fraction(0)] * len(generators)
    for sigma, coefficient in chain.terms.items():
        if sigma not in index:
            raise ValueError(f"{sigma.text} is not a generator")
        vector[index[sigma]] = coefficient
    return vector
