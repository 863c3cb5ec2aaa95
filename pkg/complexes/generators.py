"""
Complexes from digraphs and seeded random complexes for property tests.
"""

import random
from collections.abc import Iterable
from fractions import Fraction

from errors import ComplexError
from interactions import faces
from models import IntComplex, Interaction, WeightedIntComplex

from complexes.operations import build_complex


def digraph_to_complex(vertices: Iterable, arcs: Iterable[tuple]) -> IntComplex:
    """Layer 1 = vertices, layer 2 = arcs; self-loops are allowed here"""
    leaves = {str(v): Interaction.leaf(str(v)) for v in vertices}
    edges = []
    for tail, head in arcs:
        tail, head = str(tail), str(head)
        for end in (tail, head):
            if end not in leaves:
                raise ComplexError(f"arc ({tail},{head}) references unknown vertex {end}")
        edges.append(Interaction.node(leaves[tail], leaves[head]))
    return build_complex(list(leaves.values()) + edges)


def cycle_complex(n: int, reversed_edges: Iterable[int] = ()) -> IntComplex:
    """
    Vertices 1..n with edges [1,2], [2,3], ..., [n-1,n], [1,n].

    Edge k joins k and k+1 (edge n joins 1 and n) and is reversed when k is listed.
    """
    if n < 2:
        raise ComplexError("a cycle needs at least two vertices")
    flipped = set(reversed_edges)
    arcs = [(k, k + 1) for k in range(1, n)] + [(1, n)]
    arcs = [(head, tail) if k in flipped else (tail, head) for k, (tail, head) in enumerate(arcs, 1)]
    return digraph_to_complex(range(1, n + 1), arcs)


def face_closure(members: Iterable[Interaction]) -> list[Interaction]:
    """Members together with all their iterated faces"""
    seen = set(members)
    pending = sorted(seen, key=Interaction.sort_key)
    while pending:
        sigma = pending.pop()
        if sigma.order < 2:
            continue
        for face in faces(sigma):
            if face not in seen:
                seen.add(face)
                pending.append(face)
    return sorted(seen, key=Interaction.sort_key)


def random_complex(
    seed: int,
    max_order: int = 3,
    layer_size: int = 3,
    vertex_count: int = 4,
    closed: bool = False,
) -> IntComplex:
    """
    Deterministic random complex.

    Layer 1 holds vertex_count vertices v0, v1, ...; each higher layer is built
    by joining randomly chosen members of lower layers whose orders add up.

    Args:
        seed: Random seed; equal seeds give equal complexes
        max_order: Highest layer generated
        layer_size: Target number of members per layer above 1
        vertex_count: Number of vertices
        closed: Add every iterated face so the complex is face-closed
    """
    if min(max_order, layer_size, vertex_count) < 1:
        raise ComplexError("random complex parameters must be positive")
    rng = random.Random(seed)
    generated: dict[int, list[Interaction]] = {
        1: [Interaction.leaf(f"v{i}") for i in range(vertex_count)]
    }
    for p in range(2, max_order + 1):
        layer: set[Interaction] = set()
        for _ in range(4 * layer_size):
            if len(layer) >= layer_size:
                break
            split = rng.randint(1, p - 1)
            left = rng.choice(generated[split])
            right = rng.choice(generated[p - split])
            layer.add(Interaction.node(left, right))
        generated[p] = sorted(layer, key=Interaction.sort_key)
    members = [sigma for p in sorted(generated) for sigma in generated[p]]
    if closed:
        members = face_closure(members)
    return build_complex(members)


def random_weights(complex_: IntComplex, seed: int, levels: int = 6) -> dict[Interaction, Fraction]:
    """Weights in {0, 1/2, ..., levels/2}, one per member"""
    rng = random.Random(seed)
    return {sigma: Fraction(rng.randint(0, levels), 2) for sigma in complex_.members()}


def random_weighted_complex(seed: int, **params) -> WeightedIntComplex:
    complex_ = random_complex(seed, **params)
    return WeightedIntComplex(complex=complex_, weights=random_weights(complex_, seed))


def perturb_weights(
    weighted: WeightedIntComplex, seed: int, epsilon: Fraction
) -> WeightedIntComplex:
    """Move every weight by at most epsilon, in steps of epsilon/4"""
    rng = random.Random(seed)
    weights = {
        sigma: value + epsilon * Fraction(rng.randint(-4, 4), 4)
        for sigma, value in sorted(weighted.weights.items(), key=lambda item: item[0].sort_key())
    }
    return WeightedIntComplex(complex=weighted.complex, weights=weights)
