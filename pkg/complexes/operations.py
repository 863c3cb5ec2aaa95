"""
Construction and manipulation of IntComplexes: layers, unions, components,
layer and subset graphs, free pairs and collapses.
"""

import logging
from collections.abc import Iterable, Sequence

import networkx as nx

from errors import ComplexError, NotFreeError
from interactions import apply_vertex_map, faces
from interactions.operations import VertexMap
from models import FreePair, IntComplex, Interaction


def build_complex(items: Iterable[Interaction]) -> IntComplex:
    """Deduplicate and bucket interactions by order"""
    buckets: dict[int, set[Interaction]] = {}
    for sigma in items:
        buckets.setdefault(sigma.order, set()).add(sigma)
    if not buckets:
        raise ComplexError("an IntComplex needs at least one interaction")
    return IntComplex(layers={p: tuple(members) for p, members in buckets.items()})


def layer(complex_: IntComplex, p: int) -> tuple[Interaction, ...]:
    if p < 1:
        raise ComplexError(f"layer index {p} must be positive")
    return complex_.layer(p)


def is_subcomplex(a: IntComplex, b: IntComplex) -> bool:
    return all(sigma in b for sigma in a.members())


def map_complex(complex_: IntComplex, f: VertexMap) -> IntComplex:
    """Image of a complex under a vertex map"""
    return build_complex(apply_vertex_map(sigma, f) for sigma in complex_.members())


def _fresh_label(label: str, k: int) -> str:
    if label.startswith("("):
        return f"{label[:-1]}_{k})"
    return f"{label}_{k}"


def disjoint_union(a: IntComplex, b: IntComplex) -> IntComplex:
    """Layer-wise union after renaming the labels of b that a already uses"""
    used = a.labels() | b.labels()
    taken = a.labels()
    renaming: dict[str, str] = {}
    for label in sorted(b.labels()):
        if label not in taken:
            renaming[label] = label
            continue
        k = 1
        while _fresh_label(label, k) in used:
            k += 1
        renaming[label] = _fresh_label(label, k)
        used.add(renaming[label])
    renamed = map_complex(b, renaming)
    return build_complex(a.members() + renamed.members())


def connected_components(complex_: IntComplex) -> list[list[Interaction]]:
    """
    Reachability classes of the vertex set along 2-interactions.

    Only 2-interactions whose two leaves are both vertices of the complex join
    classes, in either direction. The count equals beta_1 only when every leaf
    of every 2-interaction is a vertex of the complex: in {v, w, (u,v), (u,w)}
    the chain (u,v) - (u,w) bounds v - w, so beta_1 is 1 while v and w stay
    in separate classes.
    """
    graph = nx.Graph()
    vertices = set(complex_.vertices)
    graph.add_nodes_from(vertices)
    for sigma in complex_.layer(2):
        if sigma.left in vertices and sigma.right in vertices:
            graph.add_edge(sigma.left, sigma.right)
    components = [sorted(part, key=Interaction.sort_key) for part in nx.connected_components(graph)]
    return sorted(components, key=lambda part: part[0].sort_key())


def daughter_vertex(daughter: Interaction) -> Interaction:
    """A daughter as a vertex of a derived graph, labelled by its canonical text"""
    if daughter.is_vertex:
        return daughter
    return Interaction.leaf(daughter.text)


def _daughter_graph(members: Sequence[Interaction]) -> IntComplex:
    vertices: set[Interaction] = set()
    edges: set[Interaction] = set()
    for sigma in members:
        tail = daughter_vertex(sigma.left)
        head = daughter_vertex(sigma.right)
        vertices.update((tail, head))
        edges.add(Interaction.node(tail, head))
    return IntComplex(layers={1: tuple(vertices), 2: tuple(edges)})


def layer_graph(complex_: IntComplex, p: int) -> IntComplex:
    """The digraph G_p: daughters of p-interactions joined by the p-interactions"""
    if p < 2:
        raise ComplexError("layer graphs start at p = 2")
    members = complex_.layer(p)
    if not members:
        raise ComplexError(f"layer {p} is empty")
    return _daughter_graph(members)


def default_subset(complex_: IntComplex) -> list[Interaction]:
    """Every member of order at least 2"""
    return [sigma for sigma in complex_.members() if sigma.order >= 2]


def subset_graph(complex_: IntComplex, subset: Iterable[Interaction] | None = None) -> IntComplex:
    """The digraph G_S of a mixed-order subset; None selects every member of order >= 2"""
    members = default_subset(complex_) if subset is None else list(dict.fromkeys(subset))
    if not members:
        raise ComplexError("subset is empty")
    for sigma in members:
        if sigma.order < 2:
            raise ComplexError(f"{sigma.text} is a vertex and has no daughters")
        if sigma not in complex_:
            raise ComplexError(f"{sigma.text} is not a member of the complex")
    return _daughter_graph(members)


def _cofaces(complex_: IntComplex, p: int) -> dict[Interaction, set[Interaction]]:
    incidence: dict[Interaction, set[Interaction]] = {}
    for tau in complex_.layer(p + 1):
        for sigma in set(faces(tau)):
            incidence.setdefault(sigma, set()).add(tau)
    return incidence


def free_pairs(complex_: IntComplex) -> list[FreePair]:
    """Members sigma that are a face of exactly one member of the next layer"""
    pairs = []
    for p in sorted(complex_.layers):
        incidence = _cofaces(complex_, p)
        for sigma in complex_.layer(p):
            cofaces = incidence.get(sigma, set())
            if len(cofaces) == 1:
                pairs.append(FreePair(sigma=sigma, tau=next(iter(cofaces))))
    return pairs


def face_coefficient(tau: Interaction, sigma: Interaction) -> int:
    """Signed number of times sigma occurs among the faces of tau"""
    return sum((-1) ** j for j, face in enumerate(faces(tau)) if face == sigma)


def is_elementary(complex_: IntComplex, pair: FreePair) -> bool:
    """
    A free pair whose tau is a face of no member and whose sigma survives in
    the boundary of tau with a nonzero coefficient.
    """
    if face_coefficient(pair.tau, pair.sigma) == 0:
        return False
    return pair.tau not in _cofaces(complex_, pair.tau.order)


def collapse(complex_: IntComplex, pair: FreePair) -> IntComplex:
    """Remove a free pair; the input complex is left untouched"""
    if pair not in free_pairs(complex_):
        raise NotFreeError(f"{pair} is not a free pair of the complex")
    remaining = [sigma for sigma in complex_.members() if sigma not in (pair.sigma, pair.tau)]
    if not remaining:
        raise ComplexError(f"collapsing {pair} leaves an empty complex")
    return build_complex(remaining)


def lint_complex(complex_: IntComplex) -> list[str]:
    """Daughters and faces referenced by members but missing from the complex"""
    findings = set()
    for sigma in complex_.members():
        if sigma.is_vertex:
            continue
        for daughter in (sigma.left, sigma.right):
            if daughter not in complex_:
                findings.add(f"daughter {daughter.text} of {sigma.text} is not a member")
        for face in faces(sigma):
            if face not in complex_:
                findings.add(f"face {face.text} of {sigma.text} is not a member")
    for finding in sorted(findings):
        logging.warning(f"[Lint] {finding}")
    return sorted(findings)
