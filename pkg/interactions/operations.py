"""
Combinatorial operations on single interactions: number-pair form, faces,
joins and vertex maps. Leaf indices are 1-based throughout.
"""

from collections.abc import Callable, Mapping

from errors import FaceError, InvalidPairsError, VertexMapError
from models import Interaction, NPRep

VertexMap = Mapping[str, str] | Callable[[str], str]


def order(sigma: Interaction) -> int:
    return sigma.order


def _collect_pairs(sigma: Interaction, start: int, pairs: list[tuple[int, int]]) -> int:
    if sigma.is_vertex:
        return start + 1
    middle = _collect_pairs(sigma.left, start, pairs)
    end = _collect_pairs(sigma.right, middle, pairs)
    pairs.append((start, end))
    return end


def to_np(sigma: Interaction) -> NPRep:
    """
    Number-pair form of an interaction.

    Leaf i sits between gaps i and i+1; a node covering leaves s..e becomes the
    pair (s, e+1). Pairs are listed in post-order, so the spanning pair is last.
    """
    pairs: list[tuple[int, int]] = []
    _collect_pairs(sigma, 1, pairs)
    return NPRep(vertices=tuple(sigma.leaves()), pairs=tuple(pairs))


def check_pairs(rep: NPRep):
    """Raise InvalidPairsError unless every pair of brackets nests or touches"""
    n = len(rep.vertices)
    if n == 0:
        raise InvalidPairsError("an interaction needs at least one vertex")
    pairs = list(rep.pairs)
    if len(set(pairs)) != len(pairs):
        raise InvalidPairsError("repeated number pair")
    if len(pairs) != n - 1:
        raise InvalidPairsError(f"{n} vertices need {n - 1} pairs, got {len(pairs)}")
    for left, right in pairs:
        if not 1 <= left < right <= n + 1 or right - left < 2:
            raise InvalidPairsError(f"pair ({left},{right}) does not enclose two leaves")
    for index, (l1, r1) in enumerate(pairs):
        for l2, r2 in pairs[index + 1 :]:
            nested = (l1 <= l2 and r2 <= r1) or (l2 <= l1 and r1 <= r2)
            apart = r1 <= l2 or r2 <= l1
            if not (nested or apart):
                raise InvalidPairsError(f"pairs ({l1},{r1}) and ({l2},{r2}) overlap")
    if n > 1 and (1, n + 1) not in pairs:
        raise InvalidPairsError(f"outer pair must be (1,{n + 1})")


def from_np(rep: NPRep) -> Interaction:
    """Rebuild the tree from its number pairs, rejecting invalid bracketings"""
    check_pairs(rep)
    pairs = rep.pair_set()

    def build(left: int, right: int) -> Interaction:
        if right - left == 1:
            return Interaction.leaf(rep.vertices[left - 1])
        inner = [r for l, r in pairs if l == left and r < right]
        middle = max(inner) if inner else left + 1
        if right - middle > 1 and (middle, right) not in pairs:
            raise InvalidPairsError(f"no bracket closes ({middle},{right})")
        return Interaction.node(build(left, middle), build(middle, right))

    sigma = build(1, len(rep.vertices) + 1)
    if to_np(sigma).pair_set() != pairs:
        raise InvalidPairsError("pairs do not describe a single binary tree")
    return sigma


def _check_leaf_index(sigma: Interaction, j: int):
    if sigma.order < 2:
        raise FaceError(f"{sigma.text} is a 1-interaction and has no faces")
    if not 1 <= j <= sigma.order:
        raise FaceError(f"leaf index {j} outside 1..{sigma.order}")


def minimal_pair(sigma: Interaction, j: int) -> int:
    """Index into to_np(sigma).pairs of the smallest pair enclosing leaf j"""
    _check_leaf_index(sigma, j)
    pairs = to_np(sigma).pairs
    enclosing = [index for index, (l, r) in enumerate(pairs) if l <= j < r]
    return min(enclosing, key=lambda index: pairs[index][1] - pairs[index][0])


def _drop_leaf(sigma: Interaction, j: int) -> Interaction:
    split = sigma.left.order
    if j <= split:
        if sigma.left.is_vertex:
            return sigma.right
        return Interaction.node(_drop_leaf(sigma.left, j), sigma.right)
    if sigma.right.is_vertex:
        return sigma.left
    return Interaction.node(sigma.left, _drop_leaf(sigma.right, j - split))


def face(sigma: Interaction, j: int) -> Interaction:
    """
    The j-th face: the minimal subtree containing leaf j is replaced by the
    sibling of that leaf.
    """
    _check_leaf_index(sigma, j)
    return _drop_leaf(sigma, j)


def faces(sigma: Interaction) -> list[Interaction]:
    _check_leaf_index(sigma, 1)
    return [_drop_leaf(sigma, j) for j in range(1, sigma.order + 1)]


def np_face(rep: NPRep, j: int) -> NPRep:
    """Face taken directly on the number-pair form"""
    n = len(rep.vertices)
    if n < 2 or not 1 <= j <= n:
        raise FaceError(f"leaf index {j} outside 1..{n}")
    enclosing = [(l, r) for l, r in rep.pairs if l <= j < r]
    removed = min(enclosing, key=lambda pair: pair[1] - pair[0])

    def shift(position: int) -> int:
        return position - 1 if position > j else position

    pairs = tuple((shift(l), shift(r)) for l, r in rep.pairs if (l, r) != removed)
    vertices = rep.vertices[: j - 1] + rep.vertices[j:]
    return NPRep(vertices=vertices, pairs=pairs)


def join(sigma_p: Interaction, sigma_q: Interaction) -> Interaction:
    return Interaction.node(sigma_p, sigma_q)


def join_np(rep_p: NPRep, rep_q: NPRep) -> NPRep:
    """Join on number pairs: shift the right pairs by p and add the spanning pair"""
    p = len(rep_p.vertices)
    q = len(rep_q.vertices)
    shifted = tuple((l + p, r + p) for l, r in rep_q.pairs)
    return NPRep(
        vertices=rep_p.vertices + rep_q.vertices,
        pairs=rep_p.pairs + shifted + ((1, p + q + 1),),
    )


def _lookup(f: VertexMap, label: str) -> str:
    try:
        image = f(label) if callable(f) else f[label]
    except KeyError:
        raise VertexMapError(f"vertex map undefined on {label!r}") from None
    if image is None:
        raise VertexMapError(f"vertex map undefined on {label!r}")
    return str(image)


def apply_vertex_map(sigma: Interaction, f: VertexMap) -> Interaction:
    """Relabel leaves through f; the tree shape is untouched"""
    if sigma.is_vertex:
        return Interaction.leaf(_lookup(f, sigma.vertex))
    return Interaction.node(apply_vertex_map(sigma.left, f), apply_vertex_map(sigma.right, f))
