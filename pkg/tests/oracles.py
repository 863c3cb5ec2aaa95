"""
Reference computations written without the library's linear algebra or
matching code, used to cross-check it.
"""

import itertools
from fractions import Fraction

from interactions import faces


def fraction_rank(rows, modulus: int = 0) -> int:
    """Gaussian elimination on Fractions (or residues mod a prime)"""
    matrix = [[Fraction(x) for x in row] for row in rows]
    if modulus:
        matrix = [[Fraction(int(x) % modulus) for x in row] for row in matrix]
    rank = 0
    cols = len(matrix[0]) if matrix else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        if modulus:
            inverse = pow(int(matrix[rank][col]), -1, modulus)
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                if modulus:
                    factor = int(matrix[r][col]) * inverse % modulus
                    matrix[r] = [
                        Fraction((int(a) - factor * int(b)) % modulus) for a, b in zip(matrix[r], matrix[rank])
                    ]
                else:
                    factor = matrix[r][col] / matrix[rank][col]
                    matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


def determinant(square) -> Fraction:
    """Laplace expansion; only for tiny matrices"""
    if not square:
        return Fraction(1)
    if len(square) == 1:
        return Fraction(square[0][0])
    total = Fraction(0)
    for j, value in enumerate(square[0]):
        if value:
            minor = [row[:j] + row[j + 1 :] for row in square[1:]]
            total += (-1) ** j * Fraction(value) * determinant(minor)
    return total


def minor_rank(rows) -> int:
    """Largest k with a nonzero k x k minor"""
    if not rows or not rows[0]:
        return 0
    n, m = len(rows), len(rows[0])
    for k in range(min(n, m), 0, -1):
        for chosen_rows in itertools.combinations(range(n), k):
            for chosen_cols in itertools.combinations(range(m), k):
                square = [[rows[i][j] for j in chosen_cols] for i in chosen_rows]
                if determinant(square) != 0:
                    return k
    return 0


class UnionFind:
    def __init__(self, items):
        self.parent = {item: item for item in items}

    def find(self, item):
        while self.parent[item] != item:
            self.parent[item] = self.parent[self.parent[item]]
            item = self.parent[item]
        return item

    def union(self, a, b) -> bool:
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        self.parent[root_b] = root_a
        return True

    def count(self) -> int:
        return len({self.find(item) for item in self.parent})


def merge_bars(vertex_weights: dict, edge_weights: dict) -> list[tuple]:
    """
    Degree-1 bars of a weighted graph by the elder rule.

    Edges are (u, v) keys; a merge kills the younger of the two classes.
    """
    finder = UnionFind(vertex_weights)
    birth = dict(vertex_weights)
    bars = []
    for (u, v), weight in sorted(edge_weights.items(), key=lambda item: item[1]):
        root_u, root_v = finder.find(u), finder.find(v)
        if root_u == root_v:
            continue
        older, younger = sorted((root_u, root_v), key=lambda root: birth[root])
        if birth[younger] < weight:
            bars.append((birth[younger], weight))
        finder.parent[younger] = older
    for root in {finder.find(item) for item in vertex_weights}:
        bars.append((birth[root], None))
    return sorted(bars, key=lambda bar: (bar[0], bar[1] is None, bar[1] or 0))


def _cost(a, b) -> Fraction:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def _diagonal(a) -> Fraction:
    return (a[1] - a[0]) / 2


def exhaustive_bottleneck(first, second) -> Fraction:
    """
    Minimum over every partial matching of finite points given as
    (birth, death) tuples.
    """
    best = None
    size = len(first)
    for k in range(0, min(size, len(second)) + 1):
        for chosen in itertools.combinations(range(size), k):
            for targets in itertools.permutations(range(len(second)), k):
                costs = [_cost(first[i], second[j]) for i, j in zip(chosen, targets)]
                costs += [_diagonal(first[i]) for i in range(size) if i not in chosen]
                costs += [_diagonal(second[j]) for j in range(len(second)) if j not in targets]
                value = max(costs, default=Fraction(0))
                if best is None or value < best:
                    best = value
    return best if best is not None else Fraction(0)


def _boundary_rows(complex_, q: int, outside_only: bool) -> list[list[int]]:
    """Boundary matrix of layer q, optionally only the rows outside layer q - 1"""
    generators = complex_.layer(q)
    if q < 2 or not generators:
        return []
    columns = []
    for sigma in generators:
        column: dict = {}
        for j, face in enumerate(faces(sigma)):
            column[face] = column.get(face, 0) + (-1) ** j
        columns.append(column)
    lower = set(complex_.layer(q - 1))
    rows = {face for column in columns for face in column}
    if outside_only:
        rows -= lower
    return [[column.get(row, 0) for column in columns] for row in sorted(rows, key=lambda s: s.sort_key())]


def oracle_betti(complex_, p: int) -> int:
    """
    beta_p from ranks alone:
    |A_p| - rank d_p - rank d_{p+1} + rank(d_{p+1} outside A_p),
    since dim B_p = dim Omega_{p+1} - dim Z_{p+1}.
    """
    def rank_of(rows):
        return fraction_rank(rows) if rows else 0

    return (
        len(complex_.layer(p))
        - rank_of(_boundary_rows(complex_, p, False))
        - rank_of(_boundary_rows(complex_, p + 1, False))
        + rank_of(_boundary_rows(complex_, p + 1, True))
    )
