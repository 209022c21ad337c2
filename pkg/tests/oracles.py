"""Slow, obviously-correct reference computations used only by the tests.

Nothing here touches the kernels or the library's enumeration routines.
"""
from fractions import Fraction
from itertools import combinations, product

from cutpoly.exact import in_convex_hull, solve


def cut_value(g, subset):
    subset = set(subset)
    return sum((b for i, j, b in g.edges if (i in subset) != (j in subset)), Fraction(0))


def subsets(n):
    for k in range(n + 2):
        yield from combinations(range(n + 1), k)


def brute_rank(n, pairs):
    """n + 1 minus the component count, by repeated graph search."""
    adj = {v: set() for v in range(n + 1)}
    for i, j in pairs:
        adj[i].add(j)
        adj[j].add(i)
    seen, comps = set(), 0
    for v in range(n + 1):
        if v in seen:
            continue
        comps += 1
        stack = [v]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj[x] - seen)
    return n + 1 - comps


def sign_vector_sums(g):
    """All points sum eps_u b_u (e_i - e_j), with no vertex filtering."""
    pts = set()
    for eps in product((1, -1), repeat=len(g.edges)):
        x = [Fraction(0)] * (g.n + 1)
        for e, (i, j, b) in zip(eps, g.edges):
            x[i] += e * b
            x[j] -= e * b
        pts.add(tuple(x))
    return sorted(pts)


def lp_hull_vertices(points):
    """Points not in the convex hull of the others (exact simplex)."""
    pts = sorted(set(points))
    return [p for k, p in enumerate(pts) if not in_convex_hull(p, pts[:k] + pts[k + 1:])]


def zonotope_vertices_by_hull(g):
    return lp_hull_vertices(sign_vector_sums(g))


def tight_row_vertices(n, beta):
    """Vertices of {<e_S,x> <= beta(S), sum x = 0} by solving every n-subset of rows.

    ``beta`` takes a bitmask, as SetFunction does.
    """
    rows = [(s, beta(mask(s))) for s in subsets(n) if 0 < len(s) < n + 1]
    found = set()
    for combo in combinations(rows, n):
        a = [[1 if i in s else 0 for i in range(n + 1)] for s, _ in combo] + [[1] * (n + 1)]
        x = solve(a, [b for _, b in combo] + [0])
        if x is None:
            continue
        if all(sum(x[i] for i in s) <= b for s, b in rows):
            found.add(tuple(x))
    if n == 0:
        found.add((Fraction(0),))
    return sorted(found)


def mask(subset):
    m = 0
    for i in subset:
        m |= 1 << i
    return m
