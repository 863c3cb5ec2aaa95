"""
Exhaustive generation of tree shapes and labelled interactions of a given order.
"""

import itertools
from collections.abc import Iterator, Sequence
from functools import lru_cache

from models import Interaction

SHAPE_LABEL = "x"


@lru_cache(maxsize=None)
def enumerate_shapes(n: int) -> tuple[Interaction, ...]:
    """All proper binary tree shapes with n leaves, every leaf labelled x"""
    if n < 1:
        raise ValueError("shapes need at least one leaf")
    if n == 1:
        return (Interaction.leaf(SHAPE_LABEL),)
    shapes = []
    for split in range(1, n):
        for left in enumerate_shapes(split):
            for right in enumerate_shapes(n - split):
                shapes.append(Interaction.node(left, right))
    return tuple(shapes)


def label_shape(shape: Interaction, labels: Sequence[str]) -> Interaction:
    """Relabel the leaves of a shape left to right"""
    remaining = iter(labels)

    def relabel(sigma: Interaction) -> Interaction:
        if sigma.is_vertex:
            return Interaction.leaf(next(remaining))
        left = relabel(sigma.left)
        return Interaction.node(left, relabel(sigma.right))

    return relabel(shape)


def enumerate_interactions(n: int, labels: Sequence[str]) -> Iterator[Interaction]:
    """Every interaction of order n over the given labels, repetitions allowed"""
    for shape in enumerate_shapes(n):
        for word in itertools.product(labels, repeat=n):
            yield label_shape(shape, word)
