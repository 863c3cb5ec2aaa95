"""
The fifteen isomorphism classes of loop-free digraphs on three vertices with
at least one arrow, and the nine 3-interactions used to augment them.
"""

import itertools
from functools import lru_cache

from complexes import build_complex, digraph_to_complex
from interactions import parse_interaction
from models import Digraph, IntComplex, Interaction

VERTICES = ("0", "1", "2")
NAMES = "abcdefghijklmno"
EXPECTED_CENSUS = {1: 1, 2: 4, 3: 4, 4: 4, 5: 1, 6: 1}
AUGMENTATION_TEXTS = (
    "((0,1),2)",
    "((1,0),1)",
    "(2,(1,0))",
    "(0,(2,1))",
    "((2,1),0)",
    "(1,(0,2))",
    "((0,2),1)",
    "(0,(1,0))",
    "(0,(0,2))",
)

Arcs = tuple[tuple[str, str], ...]


def all_arcs() -> list[tuple[str, str]]:
    return [(u, v) for u in VERTICES for v in VERTICES if u != v]


def relabel_arcs(arcs, mapping: dict[str, str]) -> Arcs:
    return tuple(sorted((mapping[u], mapping[v]) for u, v in arcs))


def canonical_arcs(arcs) -> Arcs:
    """Lexicographically least arc list over all relabellings of the vertices"""
    return min(
        relabel_arcs(arcs, dict(zip(VERTICES, permutation)))
        for permutation in itertools.permutations(VERTICES)
    )


def census(entries: tuple[Digraph, ...]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for entry in entries:
        counts[entry.arrow_count] = counts.get(entry.arrow_count, 0) + 1
    return dict(sorted(counts.items()))


@lru_cache(maxsize=None)
def catalog() -> tuple[Digraph, ...]:
    """
    Canonical representatives named a..o.

    Graphs are ordered by arrow count, then by number of mutual pairs (more
    first), then by canonical arc list.
    """
    classes = set()
    arcs = all_arcs()
    for size in range(1, len(arcs) + 1):
        for chosen in itertools.combinations(arcs, size):
            classes.add(canonical_arcs(chosen))
    unnamed = [Digraph(name="", vertices=VERTICES, arcs=arcs) for arcs in classes]
    unnamed.sort(key=lambda g: (g.arrow_count, -g.mutual_pairs, g.arcs))
    entries = tuple(
        Digraph(name=name, vertices=VERTICES, arcs=g.arcs) for name, g in zip(NAMES, unnamed)
    )
    found = census(entries)
    if len(unnamed) != len(NAMES) or found != EXPECTED_CENSUS:
        raise RuntimeError(f"digraph census {found} does not match {EXPECTED_CENSUS}")
    return entries


def augmentation_set() -> tuple[Interaction, ...]:
    return tuple(parse_interaction(text) for text in AUGMENTATION_TEXTS)


def digraph_complex(entry: Digraph, augmented: bool = False) -> IntComplex:
    """The digraph as a complex, optionally with the nine 3-interactions added"""
    complex_ = digraph_to_complex(entry.vertices, entry.arcs)
    if not augmented:
        return complex_
    return build_complex(complex_.members() + list(augmentation_set()))
