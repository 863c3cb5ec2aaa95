"""
Bottleneck distance between persistence diagrams.

Matched finite points cost the sup-norm distance between them; an unmatched
point costs half its persistence. Essential points only match each other, at
the distance between births. The distance is the least candidate cost that
admits a perfect matching in the bipartite graph with diagonal copies.
"""

import math
from fractions import Fraction

import networkx as nx
from networkx.algorithms import bipartite

from errors import DiagramError
from models import PersistenceDiagram, PersistencePoint, to_fraction


def point_cost(a: PersistencePoint, b: PersistencePoint) -> Fraction:
    return max(abs(a.birth - b.birth), abs(a.death - b.death))


def diagonal_cost(a: PersistencePoint) -> Fraction:
    return (a.death - a.birth) / 2


def _essential_cost(d1: PersistenceDiagram, d2: PersistenceDiagram) -> Fraction | None:
    """Sorted pairing of essential births; None when the counts differ"""
    first = sorted(point.birth for point in d1.essential())
    second = sorted(point.birth for point in d2.essential())
    if len(first) != len(second):
        return None
    return max((abs(a - b) for a, b in zip(first, second)), default=Fraction(0))


def _finite_matching_exists(first: list, second: list, delta: Fraction) -> bool:
    if not first and not second:
        return True
    graph = nx.Graph()
    left = [("point", i) for i in range(len(first))] + [("diagonal", j) for j in range(len(second))]
    right = [("target", j) for j in range(len(second))] + [("shadow", i) for i in range(len(first))]
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from(right, bipartite=1)
    for i, a in enumerate(first):
        for j, b in enumerate(second):
            if point_cost(a, b) <= delta:
                graph.add_edge(("point", i), ("target", j))
        if diagonal_cost(a) <= delta:
            graph.add_edge(("point", i), ("shadow", i))
    for j, b in enumerate(second):
        if diagonal_cost(b) <= delta:
            graph.add_edge(("diagonal", j), ("target", j))
        for i in range(len(first)):
            graph.add_edge(("diagonal", j), ("shadow", i))
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    return len(matching) // 2 == len(left)


def _check_degrees(d1: PersistenceDiagram, d2: PersistenceDiagram):
    if d1.degree != d2.degree:
        raise DiagramError(f"diagrams of degree {d1.degree} and {d2.degree} cannot be compared")


def delta_matching_exists(d1: PersistenceDiagram, d2: PersistenceDiagram, delta) -> bool:
    """True iff some partial matching keeps every matched and unmatched cost <= delta"""
    delta = to_fraction(delta)
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    essential = _essential_cost(d1, d2)
    if essential is None or essential > delta:
        return False
    return _finite_matching_exists(d1.finite(), d2.finite(), delta)


def bottleneck(d1: PersistenceDiagram, d2: PersistenceDiagram) -> Fraction | float:
    """
    Exact bottleneck distance.

    Returns:
        A Fraction, or math.inf when the diagrams have different numbers of
        essential points
    """
    _check_degrees(d1, d2)
    essential = _essential_cost(d1, d2)
    if essential is None:
        return math.inf
    first, second = d1.finite(), d2.finite()
    candidates = {Fraction(0)}
    candidates.update(diagonal_cost(a) for a in first + second)
    candidates.update(point_cost(a, b) for a in first for b in second)
    ordered = sorted(candidates)
    low, high = 0, len(ordered) - 1
    while low < high:
        middle = (low + high) // 2
        if _finite_matching_exists(first, second, ordered[middle]):
            high = middle
        else:
            low = middle + 1
    return max(essential, ordered[low])
