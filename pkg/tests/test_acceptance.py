"""Acceptance criteria 1 through 10.

Each test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and, with ``-s``, as the tests run.
"""
import random
import time
from fractions import Fraction
from itertools import permutations

import pytest

from conftest import random_graph, random_weight
from oracles import tight_row_vertices
from cutpoly import basepoly as B
from cutpoly import combinatorics as C
from cutpoly import gallery
from cutpoly import graphs as G
from cutpoly import setfunctions as F
from cutpoly import zonotope as Z
from cutpoly.roots import cut_vector, is_unimodular, subchain_masks

pytestmark = pytest.mark.acceptance

RESULTS = {}


def record(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def corpus_polytopes(corpus):
    return [(g, Z.zonotope_polytope(g)) for g in corpus]


def test_criterion_01_permutohedron():
    t0 = time.perf_counter()
    item = gallery.permutohedron(3, 1)
    p = item.polytope
    primitive = C.is_primitive(p)
    elapsed = time.perf_counter() - t0
    expected = sorted({tuple(Fraction(x) for x in v) for v in permutations((3, 1, -1, -3))})
    ok = (list(p.vertices) == expected and len(p.vertices) == 24
          and len(p.facets) == 14 == 2 ** 4 - 2 and primitive and elapsed < 1.0)
    record(1, ok, f"24 vertices = perms of (3,1,-1,-3): {list(p.vertices) == expected}; "
                  f"facets {len(p.facets)}; primitive {primitive}; {elapsed:.3f}s")


def test_criterion_02_zonotope_equals_base_polytope(corpus):
    assert len(corpus) == 38 * 5
    t0 = time.perf_counter()
    bad = [g for g in corpus
           if B.enumerate_vertices(F.cut_function(g)) != Z.zonotope_vertices(Z.generators(g), g.n)]
    elapsed = time.perf_counter() - t0
    record(2, not bad and elapsed < 30, f"{len(corpus) - len(bad)}/{len(corpus)} graphs agree; {elapsed:.2f}s")


def test_criterion_03_edmonds_vertices():
    rng = random.Random(303)
    failures = 0
    for k in range(50):
        g = random_graph(rng, 1 + k % 3, allow_empty=False)
        beta = F.cut_function(g)
        verts = sorted(set(B.order_vertices(beta)))
        if verts != tight_row_vertices(g.n, beta):
            failures += 1
            continue
        for v in verts:
            fam = B.tight_sets(beta, v)
            if not (B.has_full_chain(fam, g.n) and B.is_lattice(fam)):
                failures += 1
                break
    record(3, failures == 0, f"50 cut functions (n <= 3), {failures} mismatches against the tight-row oracle")


def test_criterion_04_cut_cone():
    rng = random.Random(404)
    failures = []
    for k in range(100):
        g = random_graph(rng, 1 + k % 6)
        beta = F.cut_function(g)
        full = G.full_mask(g.n)
        checks = {
            "submodular": F.is_submodular(beta),
            "symmetric": all(beta(s) == beta(full ^ s) for s in range(full + 1)),
            "facets": all((v == 0) == (u not in set(g.pairs())) and v >= 0
                          for u, v in F.facet_slacks(beta).items()),
            "roundtrip": F.graph_from_beta(beta) == g,
        }
        failures += [(k, name) for name, ok in checks.items() if not ok]
    record(4, not failures, f"100 graphs (n <= 6); failures {failures[:3]}")


def test_criterion_05_voronoi_a3():
    item = gallery.voronoi_an(3, 1)
    p = item.polytope
    pairs = {G.canonical(s, 3) for s, _ in p.facets}
    opposite = all((G.complement(s, 3), b) in p.facets for s, b in p.facets)
    cubical = all(len(f) == 4 for f in C.two_faces(p))
    family = pairs == set(subchain_masks(3))
    unimodular = is_unimodular([cut_vector(s, 3)[1:] for s in pairs])
    ok = (len(p.facets) == 12 and len(pairs) == 6 and opposite and len(p.vertices) == 14
          and cubical and family and unimodular and Z.nrd(item.graph) == 4)
    record(5, ok, f"vertices {len(p.vertices)}, facets {len(p.facets)} in {len(pairs)} pairs, "
                  f"cubical {cubical}, subchain family {family}, unimodular {unimodular}, nrd {Z.nrd(item.graph)}")


def test_criterion_06_belts(corpus_polytopes):
    lengths, bad = {}, 0
    for g, p in corpus_polytopes:
        for belt in C.belts(p):
            lengths[belt.length] = lengths.get(belt.length, 0) + 1
            if belt.length not in (4, 6) or (belt.length == 6 and not C.six_belt_relation(p, belt, g)):
                bad += 1
    record(6, bad == 0 and set(lengths) <= {4, 6}, f"belt lengths {dict(sorted(lengths.items()))}, {bad} bad")


def test_criterion_07_tiling_identity(corpus_polytopes):
    bad = []
    for g, p in corpus_polytopes:
        assert G.rank(g) == g.n
        rep = Z.tiling_check(p, Z.generators(g), g)
        if not (rep.tiles and rep.central_symmetry and rep.facet_symmetry):
            bad.append((g.pairs(), rep.failures))
    k3 = G.complete_graph(2)
    hexagon = Z.tiling_check(Z.zonotope_polytope(k3), Z.generators(k3), k3)
    hex_ok = hexagon.vol_squared == hexagon.lattice_gram_det == 432
    record(7, not bad and hex_ok,
           f"{len(corpus_polytopes) - len(bad)}/{len(corpus_polytopes)} tile; hexagon "
           f"{hexagon.vol_squared} = {hexagon.lattice_gram_det}")


def test_criterion_08_minimal_vector_map(corpus_polytopes):
    rows, bad = 0, 0
    for g, p in corpus_polytopes:
        gens = Z.generators(g)
        for s, _ in p.facets:
            rows += 1
            if Z.minimal_vector_map(gens, cut_vector(s, g.n), g.n) != B.support_value(g, s)[1]:
                bad += 1
    record(8, bad == 0, f"D_b(X) e_S = q_S on {rows - bad}/{rows} facet rows")


def test_criterion_09_type_domain():
    rng = random.Random(909)
    split, primitive_wrong = 0, []
    for pairs in G.connected_subgraphs(3):
        for _ in range(10):
            g1 = G.Graph.from_edges(3, [(i, j, random_weight(rng)) for i, j in pairs])
            g2 = G.Graph.from_edges(3, [(i, j, random_weight(rng)) for i, j in pairs])
            if not C.same_type(Z.zonotope_polytope(g1), Z.zonotope_polytope(g2)):
                split += 1
        unit = G.Graph.from_edges(3, [(i, j, 1) for i, j in pairs])
        if C.is_primitive(Z.zonotope_polytope(unit)) != (len(pairs) == 6):
            primitive_wrong.append(pairs)
    differ = C.type_fingerprint(Z.zonotope_polytope(G.complete_graph(2))) != \
        C.type_fingerprint(Z.zonotope_polytope(G.path(2)))
    record(9, split == 0 and differ and not primitive_wrong,
           f"380 weight pairs, {split} split types; hexagon vs parallelogram differ {differ}; "
           f"primitive exactly for K_4 {not primitive_wrong}")


def test_criterion_10_boxes():
    rng = random.Random(1010)
    bad = []
    for pairs in G.spanning_trees(3):
        t = G.Graph.from_edges(3, [(i, j, random_weight(rng)) for i, j in pairs])
        p = B.graph_polytope(t)
        facet_pairs = {G.canonical(s, 3) for s, _ in p.facets}
        if not (len(p.vertices) == 8 and len(p.facets) == 6 and len(facet_pairs) == 3
                and gallery.is_laminar(gallery.tree_family(t))):
            bad.append(pairs)
    b = [Fraction(1, 2), Fraction(3), Fraction(5, 4)]
    star = gallery.star_box(3, b)
    proj = star.polytope.projected_vertices()
    spans = [max(v[k] for v in proj) - min(v[k] for v in proj) for k in range(3)]
    box = sorted(proj) == gallery.star_box_vertices(3, b)
    modular = F.is_modular(F.cut_function(star.graph))
    ok = not bad and spans == [2 * x for x in b] and box and modular
    record(10, ok, f"16 trees, {len(bad)} bad; star box spans {[str(x) for x in spans]}, "
                   f"axis box {box}, modular {modular}")
