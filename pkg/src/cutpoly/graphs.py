"""Weighted graphs on N = {0, ..., n}, subset masks, cuts and ranks.

Subsets of N are plain ints used as bitmasks (bit ``i`` set iff ``i`` is in
the subset).  The canonical representative of the pair {S, N - S} is the one
that does not contain vertex 0.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .exact import to_fraction

MAX_N = int(os.environ.get("CUTPOLY_MAX_N", "15"))


class GraphError(ValueError):
    pass


class InvalidSubsetError(ValueError):
    pass


# ---------------------------------------------------------------- subsets

def full_mask(n: int) -> int:
    return (1 << (n + 1)) - 1


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for i in elements:
        m |= 1 << i
    return m


def elements(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def complement(mask: int, n: int) -> int:
    return full_mask(n) ^ mask


def canonical(mask: int, n: int) -> int:
    return complement(mask, n) if mask & 1 else mask


def canonical_subsets(n: int) -> range:
    """Nonempty canonical masks, i.e. nonempty subsets of N - {0}."""
    return range(2, 1 << (n + 1), 2)


# ---------------------------------------------------------------- graphs

@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("n must be nonnegative")
        if self.n > MAX_N:
            raise GraphError(f"n = {self.n} exceeds the cap {MAX_N}")
        seen = set()
        for i, j, b in self.edges:
            if not (0 <= i < j <= self.n):
                raise GraphError(f"bad edge ({i}, {j}) for n = {self.n}")
            if (i, j) in seen:
                raise GraphError(f"repeated edge ({i}, {j})")
            if b <= 0:
                raise GraphError(f"edge ({i}, {j}) has nonpositive weight {b}")
            seen.add((i, j))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence]) -> "Graph":
        """Build a graph from ``(i, j, b)`` triples; zero weights are dropped."""
        norm = []
        for e in edges:
            i, j = int(e[0]), int(e[1])
            b = to_fraction(e[2]) if len(e) > 2 else Fraction(1)
            if i > j:
                i, j = j, i
            if b == 0:
                continue
            norm.append((i, j, b))
        norm.sort()
        return cls(n, tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def weight(self, i: int, j: int) -> Fraction:
        if i > j:
            i, j = j, i
        for a, c, b in self.edges:
            if (a, c) == (i, j):
                return b
        return Fraction(0)

    def weights(self) -> dict[tuple[int, int], Fraction]:
        return {(i, j): b for i, j, b in self.edges}

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, _ in self.edges]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex permutation i -> perm[i]."""
        return Graph.from_edges(self.n, [(perm[i], perm[j], b) for i, j, b in self.edges])

    def reweight(self, weights: Sequence) -> "Graph":
        if len(weights) != self.m:
            raise GraphError(f"expected {self.m} weights, got {len(weights)}")
        return Graph.from_edges(self.n, [(i, j, w) for (i, j, _), w in zip(self.edges, weights)])


def union(g1: Graph, g2: Graph) -> Graph:
    """Edge union with summed weights."""
    if g1.n != g2.n:
        raise GraphError("dimension mismatch")
    w = g1.weights()
    for (i, j), b in g2.weights().items():
        w[(i, j)] = w.get((i, j), Fraction(0)) + b
    return Graph.from_edges(g1.n, [(i, j, b) for (i, j), b in w.items()])


def cut_edges(g: Graph, s: int) -> list[tuple[int, int, Fraction]]:
    return [(i, j, b) for i, j, b in g.edges if ((s >> i) ^ (s >> j)) & 1]


def components(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    """Connected components as masks, ordered by smallest member."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    comps: dict[int, int] = {}
    for v in range(n + 1):
        r = find(v)
        comps[r] = comps.get(r, 0) | (1 << v)
    return [comps[r] for r in sorted(comps)]


def rank(g: Graph) -> int:
    return g.n + 1 - len(components(g.n, g.pairs()))


def is_connected(g: Graph) -> bool:
    return rank(g) == g.n


def _check_proper(g: Graph, s: int) -> None:
    if s <= 0 or s >= full_mask(g.n) or s >> (g.n + 1):
        raise InvalidSubsetError(f"subset mask {s} is not a nonempty proper subset of N")


def is_minimal_cut(g: Graph, s: int) -> bool:
    _check_proper(g, s)
    kept = [(i, j) for i, j, _ in g.edges if not ((s >> i) ^ (s >> j)) & 1]
    return g.n + 1 - len(components(g.n, kept)) == rank(g) - 1


def minimal_cut_sets(g: Graph) -> list[int]:
    """Canonical masks S (0 not in S) whose cut U(S) is minimal."""
    return [s for s in canonical_subsets(g.n) if is_minimal_cut(g, s)]


def induced_components(g: Graph, s: int) -> list[int]:
    """Components of the subgraph induced on the vertex set ``s``."""
    inside = [(i, j) for i, j, _ in g.edges if (s >> i) & 1 and (s >> j) & 1]
    return [c for c in components(g.n, inside) if c & s]


def is_tree(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


def tree_cut_set(g: Graph, edge: tuple[int, int]) -> int:
    """For a tree edge u, the vertex set of the side not containing 0 after deleting u."""
    rest = [(i, j) for i, j, _ in g.edges if (i, j) != tuple(edge)]
    for c in components(g.n, rest):
        if not c & 1 and c & mask_of(edge):
            return c
    raise GraphError(f"{edge} is not a bridge of the graph")


# ---------------------------------------------------------------- families

def _weights(b, count: int) -> list[Fraction]:
    if isinstance(b, (list, tuple)):
        if len(b) != count:
            raise GraphError(f"expected {count} weights, got {len(b)}")
        return [to_fraction(x) for x in b]
    return [to_fraction(b)] * count


def _family(n: int, pairs: list[tuple[int, int]], b) -> Graph:
    if n < 1:
        raise GraphError("n must be at least 1")
    return Graph.from_edges(n, [(i, j, w) for (i, j), w in zip(pairs, _weights(b, len(pairs)))])


def complete_graph(n: int, b=1) -> Graph:
    return _family(n, list(combinations(range(n + 1), 2)), b)


def circuit(n: int, b=1) -> Graph:
    pairs = [(i, i + 1) for i in range(n)]
    if n >= 2:
        pairs.append((0, n))
    return _family(n, pairs, b)


def path(n: int, b=1) -> Graph:
    return _family(n, [(i, i + 1) for i in range(n)], b)


def star(n: int, b=1) -> Graph:
    return _family(n, [(0, i) for i in range(1, n + 1)], b)


def edgeless(n: int) -> Graph:
    return Graph(n, ())


def connected_subgraphs(n: int) -> Iterator[list[tuple[int, int]]]:
    """Edge sets of all labeled connected spanning subgraphs of K_{n+1}."""
    all_pairs = list(combinations(range(n + 1), 2))
    for k in range(n, len(all_pairs) + 1):
        for pairs in combinations(all_pairs, k):
            if len(components(n, pairs)) == 1:
                yield list(pairs)


def spanning_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    all_pairs = list(combinations(range(n + 1), 2))
    for pairs in combinations(all_pairs, n):
        if len(components(n, pairs)) == 1:
            yield list(pairs)
