"""Base polytopes P(beta) = {x : <e_S, x> <= beta(S), <e_N, x> = 0}.

Vertices come from orders of N (one chain of prefixes per order); facets of
graph polytopes come from minimal cuts.  An independent tight-row
intersection oracle is provided for cross-checking both.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .exact import affine_rank, hull_vertices, solve
from .graphs import Graph, canonical, canonical_subsets, complement, elements, full_mask, minimal_cut_sets
from .roots import cut_vector
from .setfunctions import SetFunction, cut_function, submodular_witness

Vector = tuple[Fraction, ...]


class NotSubmodularError(ValueError):
    def __init__(self, witness):
        s, t = witness
        super().__init__(f"not submodular: f({s}) + f({t}) < f({s & t}) + f({s | t})")
        self.witness = witness


class InfeasiblePointError(ValueError):
    def __init__(self, row, message):
        super().__init__(message)
        self.row = row


@dataclass(frozen=True)
class Polytope:
    """Exact V- and H-data of a polytope in the hyperplane <e_N, x> = 0 of R^(n+1).

    ``facets`` holds rows (S, beta) meaning <e_S, x> <= beta; ``incidence[v][k]``
    tells whether vertex v lies on facet k.
    """

    n: int
    dim: int
    vertices: tuple[Vector, ...]
    facets: tuple[tuple[int, Fraction], ...]
    incidence: tuple[tuple[bool, ...], ...] = field(repr=False)

    @property
    def facet_vertex_sets(self) -> list[int]:
        """Incident vertices of each facet, as bitmasks over vertex indices."""
        out = []
        for k in range(len(self.facets)):
            m = 0
            for v, row in enumerate(self.incidence):
                if row[k]:
                    m |= 1 << v
            out.append(m)
        return out

    def projected_vertices(self) -> list[tuple[Fraction, ...]]:
        """Vertices with coordinate 0 dropped (a linear bijection of the hyperplane)."""
        return [v[1:] for v in self.vertices]

    def is_centrally_symmetric(self) -> bool:
        vs = set(self.vertices)
        return all(tuple(-x for x in v) in vs for v in vs)


def make_polytope(n: int, vertices: Iterable[Sequence], facets: Iterable[tuple[int, Fraction]]) -> Polytope:
    verts = tuple(sorted({tuple(Fraction(x) for x in v) for v in vertices}))
    rows = tuple(sorted(facets, key=lambda r: (canonical(r[0], n), r[0])))
    incidence = tuple(tuple(_dot_mask(s, v) == b for s, b in rows) for v in verts)
    return Polytope(n, affine_rank(list(verts)), verts, rows, incidence)


def _dot_mask(s: int, x: Sequence[Fraction]) -> Fraction:
    return sum((x[i] for i in range(len(x)) if (s >> i) & 1), Fraction(0))


# ------------------------------------------------------------------ vertices

def vertex_from_chain(f: SetFunction, chain: Sequence[int]) -> Vector:
    """Vertex attached to a maximal chain S_1 < S_2 < ... of subsets.

    The element added at step i receives f(S_i) - f(S_{i-1}).  ``chain`` may
    stop at S_n (N is implied) or include N itself.
    """
    full = full_mask(f.n)
    chain = list(chain)
    if not chain or chain[-1] != full:
        chain.append(full)
    if len(chain) != f.n + 1:
        raise ValueError(f"a maximal chain has {f.n + 1} members, got {len(chain)}")
    x = [Fraction(0)] * (f.n + 1)
    prev = 0
    for s in chain:
        added = s & ~prev
        if s & prev != prev or bin(added).count("1") != 1:
            raise ValueError(f"chain is not nested by single elements at {s}")
        x[added.bit_length() - 1] = f(s) - f(prev)
        prev = s
    return tuple(x)


def chain_of_order(order: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for i in order:
        acc |= 1 << i
        out.append(acc)
    return out


def vertex_from_order(g: Graph, order: Sequence[int]) -> Vector:
    """x_i = sum of b_ij over j after i minus sum of b_ij over j before i."""
    if sorted(order) != list(range(g.n + 1)):
        raise ValueError(f"{tuple(order)} is not a permutation of N")
    pos = {v: k for k, v in enumerate(order)}
    x = [Fraction(0)] * (g.n + 1)
    for i, j, b in g.edges:
        hi, lo = (i, j) if pos[i] < pos[j] else (j, i)
        x[hi] += b
        x[lo] -= b
    return tuple(x)


def all_orders(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n + 1))), dtype=np.int64).reshape(-1, n + 1)


def order_vertices(f: SetFunction, orders: np.ndarray | None = None) -> list[Vector]:
    """One vertex per order (with repetitions), through the integer kernel."""
    table, d = f.int_table
    perms = all_orders(f.n) if orders is None else np.asarray(orders, dtype=np.int64)
    raw = _kernels.order_vertices(table, perms)
    return [tuple(Fraction(int(x), d) for x in row) for row in raw]


def check_base_function(f: SetFunction) -> None:
    if f(full_mask(f.n)) != 0:
        raise ValueError("f(N) must be 0 for a base polytope on <e_N, x> = 0")
    w = submodular_witness(f)
    if w is not None:
        raise NotSubmodularError(w)


def enumerate_vertices(f: SetFunction) -> list[Vector]:
    """All vertices of P(f), one order at a time, deduplicated and sorted."""
    check_base_function(f)
    return sorted(set(order_vertices(f)))


# ------------------------------------------------------------------ tight sets

def tight_sets(f: SetFunction, x: Sequence) -> frozenset[int]:
    x = tuple(Fraction(v) for v in x)
    if len(x) != f.n + 1:
        raise ValueError("dimension mismatch")
    full = full_mask(f.n)
    if sum(x) != 0:
        raise InfeasiblePointError(full, "point is off the hyperplane <e_N, x> = 0")
    out = set()
    for s in range(full + 1):
        lhs = _dot_mask(s, x)
        if lhs > f(s):
            raise InfeasiblePointError(s, f"row {elements(s)} violated: {lhs} > {f(s)}")
        if lhs == f(s):
            out.add(s)
    return frozenset(out)


def has_full_chain(family: Iterable[int], n: int) -> bool:
    fam = set(family)
    full = full_mask(n)
    if 0 not in fam or full not in fam:
        return False
    frontier = {0}
    for _ in range(n + 1):
        frontier = {s | (1 << i) for s in frontier for i in range(n + 1)
                    if not (s >> i) & 1 and s | (1 << i) in fam}
        if not frontier:
            return False
    return full in frontier


def is_lattice(family: Iterable[int]) -> bool:
    fam = set(family)
    return all(s & t in fam and s | t in fam for s in fam for t in fam)


def is_vertex(f: SetFunction, x: Sequence) -> bool:
    return has_full_chain(tight_sets(f, x), f.n)


# ------------------------------------------------------------------ H-side

def facet_rows(g: Graph) -> list[tuple[int, Fraction]]:
    """Rows (S, beta(S)) for canonical S whose cut is minimal."""
    beta = cut_function(g)
    return [(s, beta(s)) for s in minimal_cut_sets(g)]


def support_value(g: Graph, s: int) -> tuple[Fraction, Vector]:
    """(beta_G(S), q_S) with q_S = sum_t b_t <e_S, t> t, the center of the face F_S."""
    if s <= 0 or s >= full_mask(g.n):
        raise ValueError("S must be a nonempty proper subset")
    q = [Fraction(0)] * (g.n + 1)
    alpha = Fraction(0)
    for i, j, b in g.edges:
        p = ((s >> i) & 1) - ((s >> j) & 1)
        if p:
            q[i] += b * p
            q[j] -= b * p
            alpha += b
    return alpha, tuple(q)


def symmetric_hrep(f: SetFunction) -> list[tuple[int, Fraction, Fraction]]:
    """Two-sided rows -f(S) <= <e_S, x> <= f(S) for nonempty S inside N - {0}."""
    return [(s, -f(s), f(s)) for s in canonical_subsets(f.n)]


def _rows_vertices(n: int, rows: list[tuple[int, Fraction]]) -> list[Vector]:
    """Vertices of {<e_S, x> <= b for (S, b) in rows, <e_N, x> = 0} by tight-row intersection.

    Every n-subset of rows is solved together with the equality; solutions
    satisfying all rows are kept.
    """
    eq = [1] * (n + 1)
    found = set()
    for combo in combinations(rows, n):
        a = [list(cut_vector(s, n)) for s, _ in combo] + [eq]
        x = solve(a, [b for _, b in combo] + [0])
        if x is None:
            continue
        if all(_dot_mask(s, x) <= b for s, b in rows):
            found.add(tuple(x))
    if n == 0:
        found.add((Fraction(0),))
    return sorted(found)


def hrep_vertices(f: SetFunction) -> list[Vector]:
    """Independent vertex oracle over every one-sided row of P(f)."""
    full = full_mask(f.n)
    return _rows_vertices(f.n, [(s, f(s)) for s in range(1, full)])


def symmetric_hrep_vertices(f: SetFunction) -> list[Vector]:
    rows = []
    full = full_mask(f.n)
    for s, lo, hi in symmetric_hrep(f):
        rows.append((s, hi))
        # -<e_S, x> <= -lo  rewritten as  <e_{N-S}, x> <= -lo on the hyperplane
        rows.append((full ^ s, -lo))
    return _rows_vertices(f.n, rows)


def minkowski_vertices(v1: Sequence[Vector], v2: Sequence[Vector]) -> list[Vector]:
    """Vertices of conv(v1) + conv(v2) via pairwise sums and an exact hull test."""
    sums = {tuple(a + b for a, b in zip(p, q)) for p in v1 for q in v2}
    return hull_vertices(list(sums))


# ------------------------------------------------------------------ assembly

def _dedup_facets(n: int, verts: Sequence[Vector], rows: Iterable[tuple[int, Fraction]]):
    seen = set()
    out = []
    for s, b in sorted(rows, key=lambda r: (canonical(r[0], n), r[0])):
        key = frozenset(k for k, v in enumerate(verts) if _dot_mask(s, v) == b)
        if key in seen:
            continue
        seen.add(key)
        out.append((s, b))
    return out


def graph_polytope(g: Graph) -> Polytope:
    """P(beta_G) with Edmonds vertices and minimal-cut facets (both sides of each pair)."""
    beta = cut_function(g)
    verts = enumerate_vertices(beta)
    rows = []
    for s, b in facet_rows(g):
        rows.append((s, b))
        rows.append((complement(s, g.n), beta(complement(s, g.n))))
    return make_polytope(g.n, verts, _dedup_facets(g.n, verts, rows))


def polytope_from_function(f: SetFunction) -> Polytope:
    """P(f) with facets found from the vertices alone (no graph needed).

    A row is a facet when its tight vertices span an affine space of
    dimension dim - 1; rows with identical tight vertex sets are merged.
    """
    verts = enumerate_vertices(f)
    dim = affine_rank(verts)
    rows = []
    if dim >= 1:
        for s in range(1, full_mask(f.n)):
            tight = [v for v in verts if _dot_mask(s, v) == f(s)]
            if len(tight) >= dim and affine_rank(tight) == dim - 1:
                rows.append((s, f(s)))
    return make_polytope(f.n, verts, _dedup_facets(f.n, verts, rows))


def minimal_cut_rows_are_facets(g: Graph) -> bool:
    """Cross-check: minimal-cut facets agree with the vertex-only facet detection."""
    a = graph_polytope(g)
    b = polytope_from_function(cut_function(g))
    return sorted(a.facet_vertex_sets) == sorted(b.facet_vertex_sets)
