"""Named parallelotopes: permutohedra, the A_n Voronoi type, tree and star boxes."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import factorial

from . import graphs
from .basepoly import Polytope, graph_polytope, tight_sets
from .combinatorics import face_lattice, is_primitive
from .exact import rank, to_fraction
from .graphs import Graph, GraphError, is_tree, tree_cut_set
from .roots import cut_vector, is_unimodular, subchain_incidence_vectors, subchain_masks
from .setfunctions import cut_function, is_modular
from .zonotope import equals_base_polytope, nrd


@dataclass
class GalleryItem:
    name: str
    params: dict
    graph: Graph
    polytope: Polytope
    expected: dict = field(default_factory=dict)


def is_laminar(family) -> bool:
    fam = list(family)
    return all(a & b in (0, a, b) for a in fam for b in fam)


def is_nested(family) -> bool:
    fam = sorted(family, key=lambda s: bin(s).count("1"))
    return all(a & b == a for a, b in zip(fam, fam[1:]))


def tree_family(t: Graph) -> list[int]:
    """S_u for each tree edge u: the side of T - u that avoids vertex 0."""
    return [tree_cut_set(t, (i, j)) for i, j, _ in t.edges]


def permutohedron_vertices(n: int, a) -> list[tuple[Fraction, ...]]:
    a = to_fraction(a)
    base = [(n - 2 * k) * a for k in range(n + 1)]
    return sorted(set(permutations(base)))


def permutohedron(n: int, a=1) -> GalleryItem:
    a = to_fraction(a)
    if n < 1 or a <= 0:
        raise ValueError("permutohedron needs n >= 1 and a > 0")
    g = graphs.complete_graph(n, a)
    p = graph_polytope(g)
    expected = {
        "vertices": factorial(n + 1),
        "facets": 2 ** (n + 1) - 2,
        "primitive": True,
    }
    return GalleryItem("permutohedron", {"n": n, "a": a}, g, p, expected)


def voronoi_an(n: int, b=1) -> GalleryItem:
    if n < 2:
        raise ValueError("voronoi_an needs n >= 2")
    g = graphs.circuit(n, b)
    p = graph_polytope(g)
    expected = {
        "vertices": 2 ** (n + 1) - 2,
        "facets": n * (n + 1),
        "facet_vectors": n * (n + 1) // 2,
        "nrd": n + 1,
        "cubical": True,
    }
    return GalleryItem("voronoi_an", {"n": n, "b": b}, g, p, expected)


def tree_box(t: Graph) -> GalleryItem:
    if not is_tree(t):
        raise GraphError("tree_box needs a spanning tree")
    p = graph_polytope(t)
    expected = {
        "vertices": 2 ** t.n,
        "facets": 2 * t.n,
        "laminar": True,
        "nested": is_hamiltonian_path_from_zero(t),
    }
    return GalleryItem("tree_box", {"n": t.n}, t, p, expected)


def star_box(n: int, b=1) -> GalleryItem:
    g = graphs.star(n, b)
    p = graph_polytope(g)
    half = [g.weight(0, i) for i in range(1, n + 1)]
    expected = {
        "vertices": 2 ** n,
        "facets": 2 * n,
        "edge_lengths": [2 * h for h in half],
        "modular": True,
    }
    return GalleryItem("star_box", {"n": n, "b": b}, g, p, expected)


def is_hamiltonian_path_from_zero(t: Graph) -> bool:
    deg = [0] * (t.n + 1)
    for i, j, _ in t.edges:
        deg[i] += 1
        deg[j] += 1
    return is_tree(t) and deg[0] <= 1 and max(deg) <= 2


def star_box_vertices(n: int, b=1) -> list[tuple[Fraction, ...]]:
    """The axis box prod [-b_i, b_i] in the coordinates x_1, ..., x_n."""
    half = [to_fraction(x) for x in (b if isinstance(b, (list, tuple)) else [b] * n)]
    return sorted(product(*[(-h, h) for h in half]))


def verify(item: GalleryItem) -> dict[str, bool]:
    """Evaluate the closed-form expectations of a gallery item."""
    p, g, exp = item.polytope, item.graph, item.expected
    checks = {
        "vertices": len(p.vertices) == exp["vertices"],
        "facets": len(p.facets) == exp["facets"],
        "zonotope_equals_base": equals_base_polytope(g),
    }
    if item.name == "permutohedron":
        n, a = item.params["n"], item.params["a"]
        checks["coordinates"] = list(p.vertices) == permutohedron_vertices(n, a)
        checks["primitive"] = is_primitive(p)
    elif item.name == "voronoi_an":
        n = item.params["n"]
        lat = face_lattice(p)
        checks["cubical"] = all(bin(f).count("1") == 4 for f in lat[2]) if p.dim > 2 else True
        canon = sorted({graphs.canonical(s, n) for s, _ in p.facets})
        checks["facet_vectors"] = canon == sorted(subchain_masks(n)) and len(canon) == exp["facet_vectors"]
        checks["unimodular"] = is_unimodular(subchain_incidence_vectors(n))
        checks["nrd"] = nrd(g) == exp["nrd"]
    elif item.name == "tree_box":
        fam = tree_family(g)
        checks["laminar"] = is_laminar(fam)
        if exp["nested"]:
            checks["nested"] = is_nested(fam)
        checks["independent"] = _rank_of_masks(fam, g.n) == g.n
        beta = cut_function(g)
        checks["vertex_equalities"] = all(
            sum(1 for s in fam if s in tight_sets(beta, v) or graphs.complement(s, g.n) in tight_sets(beta, v)) == g.n
            for v in p.vertices)
    elif item.name == "star_box":
        n = g.n
        half = [g.weight(0, i) for i in range(1, n + 1)]
        checks["box"] = sorted(p.projected_vertices()) == star_box_vertices(n, half)
        checks["modular"] = is_modular(cut_function(g))
    return checks


def _rank_of_masks(masks, n) -> int:
    return rank([cut_vector(s, n) for s in masks]) if masks else 0
