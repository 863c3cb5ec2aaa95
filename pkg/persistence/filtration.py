"""
Sublevel filtrations of weighted complexes and of their layer graphs.
"""

from complexes import build_complex, daughter_vertex, layer_graph
from errors import ComplexError
from models import Filtration, Interaction, WeightedIntComplex


def filtration_from_weights(weighted: WeightedIntComplex) -> Filtration:
    """One step per distinct weight; step k holds every member of weight <= value k"""
    values = sorted(set(weighted.weights.values()))
    members = weighted.complex.members()
    steps = [build_complex(s for s in members if weighted.weights[s] <= value) for value in values]
    return Filtration(steps=tuple(steps), values=tuple(values))


def layer_weights(weighted: WeightedIntComplex, p: int) -> WeightedIntComplex:
    """
    The layer graph G_p with induced weights.

    Edges carry the weight of their p-interaction; a daughter vertex carries the
    least weight among the p-interactions it belongs to.
    """
    members = weighted.complex.layer(p)
    if not members:
        raise ComplexError(f"layer {p} is empty")
    graph = layer_graph(weighted.complex, p)
    weights = {}
    for sigma in members:
        value = weighted.weight(sigma)
        tail, head = daughter_vertex(sigma.left), daughter_vertex(sigma.right)
        weights[Interaction.node(tail, head)] = value
        for vertex in (tail, head):
            weights[vertex] = min(weights.get(vertex, value), value)
    return WeightedIntComplex(complex=graph, weights=weights)


def layer_filtration(weighted: WeightedIntComplex, p: int) -> Filtration:
    return filtration_from_weights(layer_weights(weighted, p))
