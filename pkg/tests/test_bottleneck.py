"""
Tests for the bottleneck distance and its stability under weight perturbation.
"""

import itertools
import math
import random
from fractions import Fraction

import pytest

from complexes import perturb_weights, random_weighted_complex
from errors import DiagramError
from models import PersistenceDiagram, PersistencePoint
from oracles import exhaustive_bottleneck
from persistence import PersistenceEngine, bottleneck, delta_matching_exists, diagonal_cost, point_cost


def diagram(*bars, degree: int = 1) -> PersistenceDiagram:
    return PersistenceDiagram(
        degree=degree, points=tuple(PersistencePoint(birth=b, death=d) for b, d in bars)
    )


def random_bars(rng: random.Random, size: int) -> list[tuple[Fraction, Fraction]]:
    bars = []
    for _ in range(size):
        birth = Fraction(rng.randint(0, 6), 2)
        bars.append((birth, birth + Fraction(rng.randint(1, 6), 2)))
    return bars


def test_costs():
    """Sup-norm between points, half the persistence to the diagonal"""
    a = PersistencePoint(birth=0, death=2)
    b = PersistencePoint(birth=Fraction(1, 2), death=3)
    assert point_cost(a, b) == 1
    assert diagonal_cost(a) == 1


def test_bottleneck_examples():
    """Equal diagrams, a lone bar and a shifted essential bar"""
    d = diagram((1, 2), (1, 3), (1, None))
    assert bottleneck(d, d) == 0
    assert bottleneck(diagram((0, 2)), diagram()) == 1
    assert bottleneck(diagram((0, 1)), diagram()) == Fraction(1, 2)
    assert bottleneck(diagram((1, None)), diagram((Fraction(3, 2), None))) == Fraction(1, 2)
    assert bottleneck(diagram((0, 2)), diagram((0, 3))) == 1
    assert bottleneck(diagram(), diagram()) == 0


def test_bottleneck_prefers_diagonal():
    """Two far bars are cheaper to send to the diagonal"""
    assert bottleneck(diagram((0, 1)), diagram((10, 11))) == Fraction(1, 2)


def test_essential_count_mismatch():
    """Different numbers of essential bars are infinitely far apart"""
    assert bottleneck(diagram((1, None)), diagram((1, None), (2, None))) == math.inf
    assert bottleneck(diagram((1, None)), diagram((1, 5))) == math.inf


def test_degree_mismatch():
    """Only diagrams of one degree compare"""
    with pytest.raises(DiagramError):
        bottleneck(diagram((0, 1)), diagram((0, 1), degree=2))


def test_delta_matching():
    """A delta-matching exists exactly from the distance upward"""
    d1, d2 = diagram((0, 2)), diagram()
    assert delta_matching_exists(d1, d2, 1)
    assert not delta_matching_exists(d1, d2, Fraction(1, 2))
    assert not delta_matching_exists(diagram((1, None)), diagram((3, None)), 1)
    with pytest.raises(ValueError):
        delta_matching_exists(d1, d2, -1)


def test_matches_exhaustive_matching():
    """Agrees with enumeration of every partial matching"""
    rng = random.Random(17)
    for _ in range(150):
        first = random_bars(rng, rng.randint(0, 5))
        second = random_bars(rng, rng.randint(0, 5))
        assert bottleneck(diagram(*first), diagram(*second)) == exhaustive_bottleneck(first, second)


def test_pseudometric():
    """Symmetry and the triangle inequality"""
    rng = random.Random(29)
    for _ in range(60):
        a, b, c = (diagram(*random_bars(rng, rng.randint(0, 4))) for _ in range(3))
        assert bottleneck(a, b) == bottleneck(b, a)
        assert bottleneck(a, c) <= bottleneck(a, b) + bottleneck(b, c)


def test_essential_pairing_sorted():
    """Essential births pair in sorted order"""
    first = diagram((0, None), (4, None))
    second = diagram((Fraction(9, 2), None), (1, None))
    assert bottleneck(first, second) == 1
    for births in itertools.permutations((0, 1, 3)):
        shifted = diagram(*((b + 1, None) for b in births))
        assert bottleneck(diagram((0, None), (1, None), (3, None)), shifted) == 1


def test_stability():
    """Perturbing weights by at most eps moves every diagram by at most eps"""
    engine = PersistenceEngine()
    for seed in range(200):
        original = random_weighted_complex(seed, max_order=3, layer_size=2, vertex_count=3)
        perturbed = perturb_weights(original, seed + 1, Fraction(1, 2))
        shift = max(abs(perturbed.weights[s] - original.weights[s]) for s in original.weights)
        assert shift <= Fraction(1, 2)
        before = engine.weighted_diagrams(original)
        after = engine.weighted_diagrams(perturbed)
        for d1, d2 in zip(before, after):
            assert bottleneck(d1, d2) <= shift
