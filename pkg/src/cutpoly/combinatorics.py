"""Face lattices, belts, primitivity and canonical incidence fingerprints."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .basepoly import Polytope
from .exact import affine_rank, rref
from .graphs import Graph, canonical, complement, is_minimal_cut


class NotCentrallySymmetricError(ValueError):
    pass


def _bits(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _unique_facet_sets(p: Polytope) -> list[int]:
    seen, out = set(), []
    for m in p.facet_vertex_sets:
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def face_lattice(p: Polytope) -> dict[int, list[int]]:
    """Nonempty faces graded by dimension, each a bitmask over vertex indices.

    Faces are the intersections of facets plus the polytope itself; for a
    point or a segment the facets are its vertices.
    """
    verts = p.vertices
    full = (1 << len(verts)) - 1
    facets = _unique_facet_sets(p)
    faces = set(facets)
    todo = list(facets)
    while todo:
        f = todo.pop()
        for g in facets:
            h = f & g
            if h and h not in faces:
                faces.add(h)
                todo.append(h)
    faces.add(full)
    graded: dict[int, list[int]] = {k: [] for k in range(p.dim + 1)}
    for f in faces:
        graded[affine_rank([verts[i] for i in _bits(f)])].append(f)
    for k in graded:
        graded[k].sort()
    return graded


def f_vector(p: Polytope) -> tuple[int, ...]:
    """Numbers of proper faces of dimension 0, ..., dim - 1 (the full body for dim 0)."""
    lat = face_lattice(p)
    if p.dim == 0:
        return (len(lat[0]),)
    return tuple(len(lat[k]) for k in range(p.dim))


@dataclass(frozen=True)
class Belt:
    facets: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.facets)


def _require_symmetric(p: Polytope) -> None:
    if not p.is_centrally_symmetric():
        raise NotCentrallySymmetricError("belts are defined for centrally symmetric polytopes")


def _cycle(adj: dict[int, set[int]]) -> tuple[int, ...]:
    if any(len(v) != 2 for v in adj.values()):
        raise ValueError("facets of a parallelism class do not form a cycle")
    start = min(adj)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(x for x in adj[cur] if x != prev) if prev is not None else min(adj[cur])
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != len(adj):
        raise ValueError("parallelism class splits into several cycles")
    return tuple(order)


def belts(p: Polytope) -> list[Belt]:
    """Belts of facets, one per parallelism class of (dim-2)-faces.

    In dimension 2 the whole polygon is one belt.  Facet indices refer to
    ``p.facets``.
    """
    _require_symmetric(p)
    if p.dim < 2:
        return []
    fsets = p.facet_vertex_sets
    if p.dim == 2:
        adj = {k: {l for l in range(len(fsets)) if l != k and fsets[k] & fsets[l]}
               for k in range(len(fsets))}
        return [Belt(_cycle(adj))]
    verts = p.vertices
    classes: dict[tuple, dict[int, set[int]]] = {}
    for ridge in face_lattice(p)[p.dim - 2]:
        pts = [verts[i] for i in _bits(ridge)]
        key = rref([[a - b for a, b in zip(q, pts[0])] for q in pts[1:]])
        owners = [k for k, m in enumerate(fsets) if m & ridge == ridge]
        if len(owners) != 2:
            raise ValueError(f"ridge lies in {len(owners)} facets")
        adj = classes.setdefault(key, {})
        a, b = owners
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return sorted((Belt(_cycle(adj)) for adj in classes.values()), key=lambda bt: bt.facets)


def six_belt_relation(p: Polytope, belt: Belt, g: Graph | None = None) -> bool:
    """Do the three facet pairs of a 6-belt satisfy e_S + e_T = e_{S u T}, S and T disjoint?

    Representatives are chosen among S and N - S for each pair.  With a graph,
    the three cuts must also be minimal.
    """
    n = p.n
    pairs = sorted({canonical(p.facets[k][0], n) for k in belt.facets})
    if len(pairs) != 3:
        return False
    if g is not None and not all(is_minimal_cut(g, s) for s in pairs):
        return False
    choices = [(s, complement(s, n)) for s in pairs]
    for a_pair, b_pair, c_pair in permutations(choices):
        for a in a_pair:
            for b in b_pair:
                for c in c_pair:
                    if a & b == 0 and a | b == c:
                        return True
    return False


def is_simple(p: Polytope) -> bool:
    """Every k-face lies in exactly dim - k facets."""
    fsets = _unique_facet_sets(p)
    lat = face_lattice(p)
    for k in range(p.dim):
        for face in lat[k]:
            if sum(1 for m in fsets if m & face == face) != p.dim - k:
                return False
    return True


def is_primitive(p: Polytope) -> bool:
    """Primitive parallelotope: simple, with the maximal 2(2^dim - 1) facets.

    The facet count separates the primitive tiling (every tiling vertex in
    dim + 1 tiles) from simple bodies like boxes, whose tilings are not.
    """
    return len(_unique_facet_sets(p)) == 2 * (2 ** p.dim - 1) and is_simple(p)


# --------------------------------------------------------------------------
# canonical labelling of the vertex-facet incidence structure

def _incidence_graph(p: Polytope) -> tuple[int, int, tuple[tuple[int, ...], ...]]:
    fsets = _unique_facet_sets(p)
    nv, nf = len(p.vertices), len(fsets)
    adj: list[list[int]] = [[] for _ in range(nv + nf)]
    for k, m in enumerate(fsets):
        for v in _bits(m):
            adj[v].append(nv + k)
            adj[nv + k].append(v)
    return nv, nf, tuple(tuple(a) for a in adj)


def _refine(colors: list[int], adj) -> list[int]:
    ncells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncells:
            return new
        colors, ncells = new, len(rank)


def _form(lab: list[int], nv: int, adj) -> tuple[int, ...]:
    # facet rows (in canonical facet order) as bitmasks over canonical vertex positions
    nodes = sorted(range(len(adj)), key=lambda x: lab[x])
    return tuple(sum(1 << lab[v] for v in adj[f]) for f in nodes[nv:])


class _Orbits:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def join(self, perm):
        for x, y in enumerate(perm):
            rx, ry = self.find(x), self.find(y)
            if rx != ry:
                self.parent[max(rx, ry)] = min(rx, ry)


def canonical_labeling(nv: int, adj) -> tuple[tuple[int, ...], list[int]]:
    """Minimal incidence form over all individualization-refinement leaves.

    Children that are images of explored siblings under automorphisms fixing
    the current path are skipped.
    """
    size = len(adj)
    best: list = [None, None]  # form, labeling
    automorphisms: list[list[int]] = []

    def leaf(lab):
        form = _form(lab, nv, adj)
        if best[0] is None or form < best[0]:
            best[0], best[1] = form, lab
        elif form == best[0]:
            inv = [0] * size
            for node, pos in enumerate(best[1]):
                inv[pos] = node
            automorphisms.append([inv[lab[x]] for x in range(size)])

    def search(colors, path):
        colors = _refine(colors, adj)
        counts: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            counts.setdefault(c, []).append(v)
        cell = next((counts[c] for c in sorted(counts) if len(counts[c]) > 1), None)
        if cell is None:
            leaf(colors)
            return
        explored: list[int] = []
        for v in cell:
            if explored:
                orbits = _Orbits(size)
                for a in automorphisms:
                    if all(a[x] == x for x in path):
                        orbits.join(a)
                if any(orbits.find(v) == orbits.find(w) for w in explored):
                    continue
            child = [2 * c for c in colors]
            child[v] -= 1
            search(child, path + [v])
            explored.append(v)

    search([0] * nv + [1] * (size - nv), [])
    return best[0], best[1]


@dataclass(frozen=True)
class TypeFingerprint:
    n_vertices: int
    n_facets: int
    form: tuple[int, ...]
    labeling: tuple[int, ...]

    @property
    def digest(self) -> str:
        text = f"{self.n_vertices}:{self.n_facets}:" + ",".join(format(r, "x") for r in self.form)
        return hashlib.sha256(text.encode()).hexdigest()

    def __eq__(self, other):
        if not isinstance(other, TypeFingerprint):
            return NotImplemented
        return (self.n_vertices, self.n_facets, self.form) == (other.n_vertices, other.n_facets, other.form)

    def __hash__(self):
        return hash((self.n_vertices, self.n_facets, self.form))


def type_fingerprint(p: Polytope) -> TypeFingerprint:
    nv, nf, adj = _incidence_graph(p)
    return _fingerprint(nv, nf, adj)


@lru_cache(maxsize=4096)
def _fingerprint(nv: int, nf: int, adj) -> TypeFingerprint:
    form, lab = canonical_labeling(nv, adj)
    return TypeFingerprint(nv, nf, form, tuple(lab))


def isomorphism(p1: Polytope, p2: Polytope) -> tuple[dict[int, int], dict[int, int]] | None:
    """Explicit (vertex map, facet map) between incidence structures, verified, or None."""
    nv1, nf1, adj1 = _incidence_graph(p1)
    nv2, nf2, adj2 = _incidence_graph(p2)
    f1, f2 = _fingerprint(nv1, nf1, adj1), _fingerprint(nv2, nf2, adj2)
    if f1 != f2:
        return None
    inv2 = {pos: node for node, pos in enumerate(f2.labeling)}
    node_map = {x: inv2[f1.labeling[x]] for x in range(nv1 + nf1)}
    for x in range(nv1 + nf1):
        if sorted(node_map[y] for y in adj1[x]) != sorted(adj2[node_map[x]]):
            raise AssertionError("canonical forms agree but the induced map is not an isomorphism")
    vmap = {x: node_map[x] for x in range(nv1)}
    fmap = {x - nv1: node_map[x] - nv2 for x in range(nv1, nv1 + nf1)}
    return vmap, fmap


def same_type(p1: Polytope, p2: Polytope) -> bool:
    return isomorphism(p1, p2) is not None


def two_faces(p: Polytope) -> list[list[tuple]]:
    """Vertex lists of the 2-dimensional faces."""
    lat = face_lattice(p)
    return [[p.vertices[i] for i in _bits(f)] for f in lat.get(2, [])]


def face_vertices(p: Polytope, face: int) -> list[tuple]:
    return [p.vertices[i] for i in _bits(face)]

