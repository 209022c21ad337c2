import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from oracles import cut_value, mask, subsets
from cutpoly import graphs as G
from cutpoly import setfunctions as F
from cutpoly.setfunctions import MinimalCutError, NotInCutConeError


def test_cut_function_examples():
    beta = F.cut_function(G.complete_graph(2))
    assert beta(mask({1})) == 2 and beta(mask({0, 1})) == 2
    for s in subsets(2):
        assert beta(mask(s)) == len(s) * (3 - len(s))
    assert F.cut_function(G.edgeless(3)) == F.zero_function(3)
    k3 = G.complete_graph(2, [1, 2, 3])
    beta = F.cut_function(k3)
    assert (beta(mask({0})), beta(mask({1})), beta(mask({2}))) == (3, 4, 5)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5))
def test_cut_function_matches_direct_sums(g):
    beta = F.cut_function(g)
    for s in subsets(g.n):
        assert beta(mask(s)) == cut_value(g, s)
    assert beta.is_symmetric()
    assert beta(G.full_mask(g.n)) == 0


def test_is_submodular_examples():
    assert F.is_submodular(F.cut_function(G.complete_graph(3, [1, 2, 3, 4, 5, 6])))
    sq = F.size_function(2, lambda k: k * k)
    assert not F.is_submodular(sq)
    s, t = F.submodular_witness(sq)
    assert sq(s) + sq(t) < sq(s & t) + sq(s | t)
    # the pair {1}, {2}: 1 + 1 < 0 + 4
    assert sq(mask({1})) + sq(mask({2})) < sq(0) + sq(mask({1, 2}))
    assert F.is_submodular(F.zero_function(3))


def test_submodular_witness_is_first_violation():
    sq = F.size_function(3, lambda k: k * k)
    expected = next((s, t) for s in range(16) for t in range(16)
                    if sq(s) + sq(t) < sq(s & t) + sq(s | t))
    assert F.submodular_witness(sq) == expected


def test_is_modular():
    beta = F.cut_function(G.star(4, [1, 2, "1/3", 5]))
    assert F.is_modular(beta)
    k3 = F.cut_function(G.complete_graph(2))
    assert not F.is_modular(k3, domain=range(8))
    assert F.is_modular(F.zero_function(2), domain=range(8))


def test_weights_from_beta():
    k3 = G.complete_graph(2, [1, 2, 3])
    w = F.weights_from_beta(F.cut_function(k3))
    assert w == {(0, 1): 1, (0, 2): 2, (1, 2): 3}
    assert all(b == 0 for b in F.weights_from_beta(F.cut_function(G.edgeless(3))).values())
    with pytest.raises(NotInCutConeError):
        F.weights_from_beta(F.size_function(2, [0, 1, 3, 0].__getitem__))


def test_weights_roundtrip_random():
    rng = random.Random(7)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 6))
        assert F.graph_from_beta(F.cut_function(g)) == g


def test_simple_equalities():
    c4 = G.circuit(3)
    beta = F.cut_function(c4)
    assert beta(mask({1, 3})) == 4
    assert F.simple_decomposition(c4, mask({1, 3})) == (mask({1}), mask({3}))
    assert F.simple_equality_holds(beta, c4, mask({1, 3}))
    # tree 0-1, 1-2, 1-3: {2, 3} joins two leaf subtrees separated in T
    t = G.Graph.from_edges(3, [(0, 1, 2), (1, 2, 3), (1, 3, 5)])
    assert F.simple_equality_holds(F.cut_function(t), t, mask({2, 3}))
    with pytest.raises(MinimalCutError):
        F.simple_equality_holds(beta, c4, mask({1}))


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=4))
def test_simple_equality_on_every_nonminimal_cut(g):
    if G.rank(g) != g.n:
        return
    beta = F.cut_function(g)
    for s in G.canonical_subsets(g.n):
        if not G.is_minimal_cut(g, s):
            s1, s2 = F.simple_decomposition(g, s)
            assert s1 & s2 == 0 and s1 and s2
            assert F.simple_equality_holds(beta, g, s)


def test_add_and_scale():
    rng = random.Random(3)
    for _ in range(20):
        g1, g2 = random_graph(rng, 3), random_graph(rng, 3)
        assert F.cut_function(g1) + F.cut_function(g2) == F.cut_function(G.union(g1, g2))
        assert F.is_submodular(F.add(F.cut_function(g1), F.cut_function(g2)))
    f = F.cut_function(G.complete_graph(3))
    assert F.add(f, F.zero_function(3)) == f
    assert F.scale(f, Fraction(1, 2))(mask({1})) == Fraction(3, 2)
    with pytest.raises(ValueError):
        F.add(f, F.zero_function(2))
    with pytest.raises(ValueError):
        F.scale(f, 0)


def test_delta_combination_is_cut_function():
    g = G.complete_graph(3, [1, "2/3", 3, 4, "5/7", 6])
    combo = F.combination(3, {(i, j): b for i, j, b in g.edges})
    assert combo == F.cut_function(g)
    for i, j, _ in g.edges:
        assert F.cut_function(G.Graph.from_edges(3, [(i, j, 1)])) == F.delta_function(3, (i, j))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5))
def test_facet_inequalities_tight_on_non_edges(g):
    slack = F.facet_slacks(F.cut_function(g))
    edges = set(g.pairs())
    for u, v in slack.items():
        assert v >= 0
        assert (v == 0) == (u not in edges)
