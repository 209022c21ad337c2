"""Roots e_i - e_j of A_n, cut vectors e_S, and unimodularity of vector sets."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact import rank as exact_rank
from .exact import solve
from .graphs import mask_of


class NotARootError(ValueError):
    pass


IntVector = tuple[int, ...]


def root_of_edge(i: int, j: int, n: int) -> IntVector:
    if not (0 <= i < j <= n):
        raise NotARootError(f"({i}, {j}) is not an edge of K_{n + 1}")
    v = [0] * (n + 1)
    v[i], v[j] = 1, -1
    return tuple(v)


def edge_of_root(t: Sequence[int]) -> tuple[int, int]:
    support = [k for k, x in enumerate(t) if x != 0]
    if len(support) != 2 or sorted(t[k] for k in support) != [-1, 1]:
        raise NotARootError(f"{tuple(t)} is not a root e_i - e_j")
    return support[0], support[1]


def is_root(t: Sequence[int]) -> bool:
    try:
        edge_of_root(t)
    except NotARootError:
        return False
    return True


def cut_vector(s: int, n: int) -> IntVector:
    return tuple((s >> i) & 1 for i in range(n + 1))


def mask_of_cut_vector(v: Sequence[int]) -> int:
    if any(x not in (0, 1) for x in v):
        raise ValueError(f"{tuple(v)} is not a 0/1 vector")
    return mask_of(k for k, x in enumerate(v) if x)


def pairing(e_s: Sequence[int], t: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(e_s, t))


def delta(u: tuple[int, int], s: int) -> int:
    """1 iff the edge u has exactly one end in S."""
    i, j = u
    return ((s >> i) ^ (s >> j)) & 1


def dimension(vectors: Sequence[Sequence[int]]) -> int:
    return exact_rank(vectors) if vectors else 0


def coordinates(basis: Sequence[Sequence[int]], v: Sequence[int]) -> list[Fraction] | None:
    """Coordinates of v in an independent list ``basis`` (None if v is outside the span)."""
    r = len(basis)
    # normal equations B B^T c = B v are square and nonsingular for independent rows
    gram = [[sum(a * b for a, b in zip(p, q)) for q in basis] for p in basis]
    rhs = [sum(a * b for a, b in zip(p, v)) for p in basis]
    c = solve(gram, rhs)
    if c is None:
        return None
    recon = [sum((c[k] * basis[k][i] for k in range(r)), Fraction(0)) for i in range(len(v))]
    return c if recon == [Fraction(x) for x in v] else None


def unimodularity_witness(vectors: Sequence[Sequence[int]]):
    """First (basis, vector, coordinates) with a non-integral coordinate, or None.

    Exponential: every r-subset is tried, r = dim X.
    """
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return None
    r = dimension(vecs)
    if r == 0:
        return None
    for idx in combinations(range(len(vecs)), r):
        basis = [vecs[k] for k in idx]
        if exact_rank(basis) < r:
            continue
        for v in vecs:
            c = coordinates(basis, v)
            if c is None or any(x.denominator != 1 for x in c):
                return basis, v, c
    return None


def is_unimodular(vectors: Sequence[Sequence[int]]) -> bool:
    return unimodularity_witness(vectors) is None


def is_asymmetric(vectors: Sequence[Sequence[int]]) -> bool:
    seen = set()
    for v in vectors:
        v = tuple(v)
        if v in seen or tuple(-x for x in v) in seen:
            return False
        seen.add(v)
    return True


def roots_of(pairs: Sequence[tuple[int, int]], n: int) -> list[IntVector]:
    return [root_of_edge(i, j, n) for i, j in pairs]


def subchain_incidence_vectors(n: int) -> list[IntVector]:
    """Incidence vectors of the contiguous intervals of the chain 1 - 2 - ... - n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            out.append(cut_vector(mask_of(range(a, b + 1)), n))
    return out


def subchain_masks(n: int) -> list[int]:
    return [mask_of_cut_vector(v) for v in subchain_incidence_vectors(n)]


def support(v: Sequence[int]) -> list[int]:
    return [k for k, x in enumerate(v) if x]

