"""Set functions on 2^N: cut functions, submodularity, modularity, weight recovery."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable

import numpy as np

from . import _kernels
from .exact import common_denominator, to_fraction
from .graphs import (Graph, canonical_subsets, complement, full_mask, induced_components,
                     is_minimal_cut)


class NotInCutConeError(ValueError):
    pass


class MinimalCutError(ValueError):
    """Raised when a simple decomposition is requested for a minimal cut."""


@dataclass(frozen=True, eq=True)
class SetFunction:
    """All 2^(n+1) values of a set function, indexed by subset mask."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != 1 << (self.n + 1):
            raise ValueError(f"expected {1 << (self.n + 1)} values, got {len(self.values)}")
        if self.values[0] != 0:
            raise ValueError("a set function must vanish on the empty set")

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[int], object]) -> "SetFunction":
        return cls(n, tuple(to_fraction(fn(s)) for s in range(1 << (n + 1))))

    def __call__(self, s: int) -> Fraction:
        return self.values[s]

    def __add__(self, other: "SetFunction") -> "SetFunction":
        return add(self, other)

    @cached_property
    def int_table(self) -> tuple[np.ndarray, int]:
        """Values scaled by their common denominator, as an int64 (or object) array."""
        d = common_denominator(self.values)
        ints = [int(v * d) for v in self.values]
        bound = 4 * max((abs(v) for v in ints), default=0)
        return _kernels.as_int_array(ints, bound), d

    def is_symmetric(self) -> bool:
        full = full_mask(self.n)
        return all(self.values[s] == self.values[full ^ s] for s in range(len(self.values)))


def zero_function(n: int) -> SetFunction:
    return SetFunction(n, (Fraction(0),) * (1 << (n + 1)))


def cut_function(g: Graph) -> SetFunction:
    """beta(S) = sum of the weights of the edges with exactly one end in S."""
    weights = [b for _, _, b in g.edges]
    d = common_denominator(weights)
    ints = [int(b * d) for b in weights]
    bound = sum(abs(x) for x in ints)
    w = _kernels.as_int_array(ints, bound)
    ei = np.array([i for i, _, _ in g.edges], dtype=np.int64)
    ej = np.array([j for _, j, _ in g.edges], dtype=np.int64)
    table = _kernels.cut_table(g.n, ei, ej, w)
    return SetFunction(g.n, tuple(Fraction(int(v), d) for v in table))


def delta_function(n: int, u: tuple[int, int]) -> SetFunction:
    i, j = u
    return SetFunction(n, tuple(Fraction(((s >> i) ^ (s >> j)) & 1) for s in range(1 << (n + 1))))


def add(f1: SetFunction, f2: SetFunction) -> SetFunction:
    if f1.n != f2.n:
        raise ValueError(f"dimension mismatch: n = {f1.n} vs n = {f2.n}")
    return SetFunction(f1.n, tuple(a + b for a, b in zip(f1.values, f2.values)))


def scale(f: SetFunction, c) -> SetFunction:
    c = to_fraction(c)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    return SetFunction(f.n, tuple(c * v for v in f.values))


def submodular_witness(f: SetFunction) -> tuple[int, int] | None:
    """First pair (S, T) with f(S) + f(T) < f(S & T) + f(S | T), scanning S then T."""
    table, _ = f.int_table
    s, t = _kernels.submodular_witness(table)
    return None if s < 0 else (s, t)


def is_submodular(f: SetFunction) -> bool:
    return submodular_witness(f) is None


def is_modular(f: SetFunction, domain: Iterable[int] | None = None) -> bool:
    """f(S) = sum of f({i}) over i in S for every S in ``domain``.

    The default domain is every subset of N - {0}.
    """
    if domain is None:
        domain = range(0, 1 << (f.n + 1), 2)
    for s in domain:
        total = sum((f(1 << i) for i in range(f.n + 1) if (s >> i) & 1), Fraction(0))
        if f(s) != total:
            return False
    return True


def weights_from_beta(f: SetFunction, strict: bool = True) -> dict[tuple[int, int], Fraction]:
    """Recover b_ij = (f(i) + f(j) - f(ij)) / 2 for every pair i < j.

    A negative value means f lies outside the closed cut cone; with
    ``strict`` this raises :class:`NotInCutConeError`.
    """
    out = {}
    for i, j in combinations(range(f.n + 1), 2):
        b = (f(1 << i) + f(1 << j) - f((1 << i) | (1 << j))) / 2
        if strict and b < 0:
            raise NotInCutConeError(f"facet inequality violated at ({i}, {j}): 2b = {2 * b}")
        out[(i, j)] = b
    return out


def graph_from_beta(f: SetFunction) -> Graph:
    return Graph.from_edges(f.n, [(i, j, b) for (i, j), b in weights_from_beta(f).items()])


def facet_slacks(f: SetFunction) -> dict[tuple[int, int], Fraction]:
    """beta(i) + beta(j) - beta(ij) for every pair; nonnegative on the cut cone."""
    return {u: 2 * b for u, b in weights_from_beta(f, strict=False).items()}


def simple_decomposition(g: Graph, s: int) -> tuple[int, int]:
    """Split S (or its complement) into disjoint S1, S2 with U(S) = U(S1) + U(S2).

    Raises :class:`MinimalCutError` when U(S) is a minimal cut.
    """
    if is_minimal_cut(g, s):
        raise MinimalCutError(f"U({s}) is a minimal cut; no simple equality applies")
    for side in (s, complement(s, g.n)):
        comps = induced_components(g, side)
        if len(comps) >= 2:
            return comps[0], side ^ comps[0]
    # every edge of U(S) lies inside a single component; the cut is empty there
    raise MinimalCutError(f"no decomposition found for {s}")


def simple_equality_holds(f: SetFunction, g: Graph, s: int) -> bool:
    s1, s2 = simple_decomposition(g, s)
    return f(s) == f(s1) + f(s2)


def canonical_values(f: SetFunction) -> dict[int, Fraction]:
    return {s: f(s) for s in canonical_subsets(f.n)}


def from_canonical(n: int, values: dict[int, object]) -> SetFunction:
    """Symmetric extension of values given on masks (missing complements mirror their partner)."""
    full = full_mask(n)
    table: list[Fraction | None] = [None] * (1 << (n + 1))
    for s, v in values.items():
        if not 0 <= s <= full:
            raise ValueError(f"mask {s} out of range for n = {n}")
        table[s] = to_fraction(v)
    table[0] = table[0] if table[0] is not None else Fraction(0)
    for s in range(len(table)):
        if table[s] is None:
            partner = table[full ^ s]
            table[s] = partner if partner is not None else Fraction(0)
    return SetFunction(n, tuple(table))


def combination(n: int, coefficients: dict[tuple[int, int], object]) -> SetFunction:
    """sum over u of b_u * delta_u."""
    coeffs = {u: to_fraction(b) for u, b in coefficients.items()}
    return SetFunction.from_callable(
        n, lambda s: sum((b for (i, j), b in coeffs.items() if ((s >> i) ^ (s >> j)) & 1), Fraction(0)))


def size_function(n: int, fn: Callable[[int], object]) -> SetFunction:
    """Set function depending only on |S|."""
    return SetFunction.from_callable(n, lambda s: fn(bin(s).count("1")))

