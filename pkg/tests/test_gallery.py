from fractions import Fraction

import pytest

from oracles import mask
from cutpoly import gallery
from cutpoly import graphs as G
from cutpoly.graphs import GraphError


@pytest.mark.parametrize("n", [1, 2, 3])
def test_permutohedron(n):
    item = gallery.permutohedron(n)
    assert all(gallery.verify(item).values())
    assert len(item.polytope.vertices) == [2, 6, 24][n - 1]


def test_permutohedron_coordinates():
    item = gallery.permutohedron(3, "1/2")
    assert item.polytope.vertices[0] == (Fraction(-3, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2))
    assert gallery.permutohedron_vertices(2, 1) == sorted(
        [(2, 0, -2), (2, -2, 0), (0, 2, -2), (0, -2, 2), (-2, 2, 0), (-2, 0, 2)])
    with pytest.raises(ValueError):
        gallery.permutohedron(3, 0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_voronoi_an(n):
    item = gallery.voronoi_an(n)
    checks = gallery.verify(item)
    assert all(checks.values()), checks
    assert len(item.polytope.facets) == n * (n + 1)


def test_voronoi_a3_fixture():
    item = gallery.voronoi_an(3)
    p = item.polytope
    assert len(p.vertices) == 14 and len(p.facets) == 12
    pairs = {G.canonical(s, 3) for s, _ in p.facets}
    assert len(pairs) == 6
    assert pairs == {mask(s) for s in [{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}]}


def test_tree_boxes():
    for pairs in G.spanning_trees(3):
        t = G.Graph.from_edges(3, [(i, j, k + 1) for k, (i, j) in enumerate(pairs)])
        item = gallery.tree_box(t)
        checks = gallery.verify(item)
        assert all(checks.values()), (pairs, checks)
        assert len(item.polytope.vertices) == 8


def test_nested_family_for_path():
    t = G.path(3)
    assert gallery.is_hamiltonian_path_from_zero(t)
    fam = gallery.tree_family(t)
    assert sorted(fam) == [mask({3}), mask({2, 3}), mask({1, 2, 3})]
    assert gallery.is_nested(fam) and gallery.is_laminar(fam)
    assert not gallery.is_hamiltonian_path_from_zero(G.star(3))


def test_laminar_helpers():
    assert gallery.is_laminar([0b0010, 0b0110, 0b1000])
    assert not gallery.is_laminar([0b0110, 0b1100])
    assert not gallery.is_nested([0b0010, 0b1000])


def test_tree_box_rejects_non_tree():
    with pytest.raises(GraphError):
        gallery.tree_box(G.circuit(3))


def test_star_box():
    item = gallery.star_box(3, [1, 2, 3])
    checks = gallery.verify(item)
    assert all(checks.values()), checks
    assert item.expected["edge_lengths"] == [2, 4, 6]
    proj = item.polytope.projected_vertices()
    spans = [max(v[k] for v in proj) - min(v[k] for v in proj) for k in range(3)]
    assert spans == [2, 4, 6]
