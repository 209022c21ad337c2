"""Zonotopes Z_b(X) = sum_t b_t [-t, t] for asymmetric sets X of roots.

Also the Gram matrix D_b(X), the minimal-vector map p -> D_b(X) p, the
type-domain dimension and the tiling report.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from . import _kernels
from .basepoly import Polytope, Vector, enumerate_vertices, facet_rows, make_polytope
from .basepoly import _dedup_facets
from .combinatorics import Belt, belts, face_vertices, six_belt_relation
from .exact import common_denominator, gram_det, lattice_gram_det, rank, to_fraction
from .graphs import Graph, complement, elements
from .roots import cut_vector, edge_of_root, is_asymmetric, root_of_edge
from .setfunctions import cut_function

MAX_GENERATORS = 20


@dataclass(frozen=True)
class SegmentGenerator:
    t: tuple[int, ...]
    b: Fraction

    def __post_init__(self):
        edge_of_root(self.t)
        if self.b <= 0:
            raise ValueError("segment half-length must be positive")


def generators(g: Graph) -> list[SegmentGenerator]:
    """X(G) with weights: one root e_i - e_j per edge (i < j)."""
    return [SegmentGenerator(root_of_edge(i, j, g.n), b) for i, j, b in g.edges]


def graph_of(gens: Sequence[SegmentGenerator], n: int) -> Graph:
    return Graph.from_edges(n, [(*edge_of_root(s.t), s.b) for s in gens])


def _check(gens: Sequence[SegmentGenerator]) -> int:
    if not gens:
        raise ValueError("dimension unknown for an empty generator list; pass n")
    return len(gens[0].t) - 1


def zonotope_vertices(gens: Sequence[SegmentGenerator], n: int | None = None) -> list[Vector]:
    """Vertices sum_t eps_t b_t t over sign vectors that some functional realizes.

    All 2^|X| sign vectors are enumerated.  For roots, eps is realized by a
    functional c (eps_t <c, t> > 0 for all t) exactly when the orientation
    it puts on G(X) is acyclic, which is what the kernel tests.
    """
    if n is None:
        n = _check(gens)
    if len(gens) > MAX_GENERATORS:
        raise ValueError(f"{len(gens)} generators exceed the cap {MAX_GENERATORS}")
    if not is_asymmetric([s.t for s in gens]):
        raise ValueError("generator set is not asymmetric")
    if not gens:
        return [(Fraction(0),) * (n + 1)]
    d = common_denominator(s.b for s in gens)
    ints = [int(s.b * d) for s in gens]
    w = _kernels.as_int_array(ints, sum(ints))
    ei = np.array([s.t.index(1) for s in gens], dtype=np.int64)
    ej = np.array([s.t.index(-1) for s in gens], dtype=np.int64)
    points, acyclic = _kernels.sign_vector_points(n, ei, ej, w)
    out = {tuple(Fraction(int(x), d) for x in row) for row, ok in zip(points, acyclic) if ok}
    return sorted(out)


def zonotope_polytope(g: Graph) -> Polytope:
    """Z_b(G) with vertices from sign vectors and facets from minimal cuts."""
    verts = zonotope_vertices(generators(g), g.n)
    beta = cut_function(g)
    rows = []
    for s, b in facet_rows(g):
        rows.append((s, b))
        rows.append((complement(s, g.n), beta(complement(s, g.n))))
    return make_polytope(g.n, verts, _dedup_facets(g.n, verts, rows))


def base_polytope_mismatch(g: Graph) -> list[Vector]:
    """Symmetric difference of the Edmonds and zonotope vertex sets (empty when equal)."""
    a = set(enumerate_vertices(cut_function(g)))
    b = set(zonotope_vertices(generators(g), g.n))
    return sorted(a ^ b)


def equals_base_polytope(g: Graph) -> bool:
    return not base_polytope_mismatch(g)


def gram_matrix(gens: Sequence[SegmentGenerator], n: int | None = None) -> list[list[Fraction]]:
    """D_b(X) = sum_t b_t t t^T."""
    if n is None:
        n = _check(gens)
    d = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for s in gens:
        for i, ti in enumerate(s.t):
            if ti:
                for j, tj in enumerate(s.t):
                    if tj:
                        d[i][j] += s.b * ti * tj
    return d


def quadratic_form(gens: Sequence[SegmentGenerator], x: Sequence) -> Fraction:
    """sum_t b_t <t, x>^2."""
    x = [to_fraction(v) if not isinstance(v, Fraction) else v for v in x]
    return sum((s.b * sum((a * b for a, b in zip(s.t, x)), Fraction(0)) ** 2 for s in gens), Fraction(0))


def minimal_vector_map(gens: Sequence[SegmentGenerator], p: Sequence[int],
                       n: int | None = None) -> Vector:
    """q_p = D_b(X) p."""
    d = gram_matrix(gens, len(p) - 1 if n is None else n)
    return tuple(sum((row[j] * p[j] for j in range(len(p))), Fraction(0)) for row in d)


def nrd(g: Graph) -> int:
    """Dimension of the type domain: the number of edges."""
    return g.m


def basis_volumes(gens: Sequence[SegmentGenerator]) -> dict[tuple[int, ...], tuple[Fraction, Fraction]]:
    """For each basis B of X: (prod of b_t over B, Gram determinant of the roots of B)."""
    vecs = [s.t for s in gens]
    r = rank(vecs) if vecs else 0
    out = {}
    for idx in combinations(range(len(vecs)), r):
        sub = [vecs[k] for k in idx]
        g = gram_det(sub)
        if g != 0:
            w = Fraction(1)
            for k in idx:
                w *= gens[k].b
            out[idx] = (w, g)
    return out


def volume_squared(gens: Sequence[SegmentGenerator]) -> Fraction:
    """Squared intrinsic volume 4^r (sum_B prod b_t |det B|)^2 of Z_b(X).

    |det B| is sqrt(Gram(B)); for unimodular X every basis has the same Gram
    determinant, which keeps the result rational.
    """
    vols = basis_volumes(gens)
    if not vols:
        return Fraction(1)
    grams = {g for _, g in vols.values()}
    if len(grams) != 1:
        raise ValueError("bases have different Gram determinants; the volume is not rational here")
    r = len(next(iter(vols)))
    total = sum((w for w, _ in vols.values()), Fraction(0))
    return Fraction(4) ** r * grams.pop() * total * total


def translate_lattice_generators(p: Polytope, gens: Sequence[SegmentGenerator]) -> list[Vector]:
    """Twice the facet centers, 2 D_b(X) e_S, one per facet row."""
    return [tuple(2 * x for x in minimal_vector_map(gens, cut_vector(s, p.n), p.n)) for s, _ in p.facets]


def _centrally_symmetric(points: Sequence[Vector]) -> bool:
    pts = set(points)
    k = len(points)
    center = tuple(sum(c) / k for c in zip(*points))
    return all(tuple(2 * c - x for c, x in zip(center, v)) in pts for v in pts)


@dataclass
class TilingReport:
    central_symmetry: bool
    facet_symmetry: bool
    belts: list[Belt]
    vol_squared: Fraction
    lattice_gram_det: Fraction
    six_belts_ok: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def belts_ok(self) -> bool:
        return all(b.length in (4, 6) for b in self.belts)

    @property
    def tiles(self) -> bool:
        return (self.central_symmetry and self.facet_symmetry and self.belts_ok
                and self.six_belts_ok and self.vol_squared == self.lattice_gram_det)


def tiling_check(p: Polytope, gens: Sequence[SegmentGenerator], g: Graph | None = None) -> TilingReport:
    """Parallelotope evidence for p = Z_b(X): symmetry, belts, and covolume.

    The squared volume is compared with the Gram determinant of the lattice
    generated by {2 q_S}.
    """
    failures = []
    central = p.is_centrally_symmetric()
    if not central:
        failures.append("body is not centrally symmetric")
    facet_sym = True
    for k, m in enumerate(p.facet_vertex_sets):
        if p.dim >= 1 and not _centrally_symmetric(face_vertices(p, m)):
            facet_sym = False
            failures.append(f"facet {elements(p.facets[k][0])} is not centrally symmetric")
    bl = belts(p) if central else []
    for b in bl:
        if b.length not in (4, 6):
            failures.append(f"belt {b.facets} has length {b.length}")
    six_ok = all(six_belt_relation(p, b, g) for b in bl if b.length == 6)
    if not six_ok:
        failures.append("a 6-belt violates e_S + e_T = e_(S u T)")
    vol2 = volume_squared(gens) if gens else Fraction(1)
    lattice = lattice_gram_det(translate_lattice_generators(p, gens)) if p.facets else Fraction(1)
    if vol2 != lattice:
        failures.append(f"vol^2 = {vol2} but lattice Gram determinant = {lattice}")
    return TilingReport(central, facet_sym, bl, vol2, lattice, six_ok, failures)
