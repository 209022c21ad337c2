"""Exact rational helpers: parsing, formatting, linear algebra and a tiny LP.

Everything here works on :class:`fractions.Fraction` or Python ints; no
floating point is used anywhere on the exact path.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class RationalFormatError(ValueError):
    pass


def to_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalFormatError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise RationalFormatError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise RationalFormatError(f"malformed rational {text!r}") from None
    if q <= 0:
        raise RationalFormatError(f"malformed rational {text!r}: denominator must be positive")
    return Fraction(p, q)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def common_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for v in values:
        d = lcm(d, Fraction(v).denominator)
    return d


def scale_to_int(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Multiply a rational matrix by the lcm of its denominators."""
    d = common_denominator(x for r in rows for x in r)
    return [[int(x * d) for x in r] for r in rows], d


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    if not rows:
        return 0
    m, _ = scale_to_int([[Fraction(x) for x in r] for r in rows])
    return _bareiss_rank(m)


def _bareiss_rank(m: list[list[int]]) -> int:
    m = [row[:] for row in m]
    nrows, ncols = len(m), len(m[0]) if m else 0
    r, prev = 0, 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((k for k in range(r, nrows) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for k in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[k][j] = (m[k][j] * m[r][c] - m[r][j] * m[k][c]) // prev
            m[k][c] = 0
        prev = m[r][c]
        r += 1
    return r


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((k for k in range(c, n) if a[k][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        result *= a[c][c]
        for k in range(c + 1, n):
            if a[k][c] != 0:
                f = a[k][c] / a[c][c]
                for j in range(c, n):
                    a[k][j] -= f * a[c][j]
    return sign * result


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Solve a square system exactly; ``None`` when singular."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for c in range(n):
        piv = next((k for k in range(c, n) if a[k][c] != 0), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for k in range(n):
            if k != c and a[k][c] != 0:
                f = a[k][c]
                a[k] = [x - f * y for x, y in zip(a[k], a[c])]
    return [row[n] for row in a]


def rref(rows: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced row echelon form with zero rows dropped; a canonical key for a row space."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return ()
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(a)) if a[k][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for k in range(len(a)):
            if k != r and a[k][c] != 0:
                f = a[k][c]
                a[k] = [x - f * y for x, y in zip(a[k], a[r])]
        r += 1
        if r == len(a):
            break
    return tuple(tuple(row) for row in a[:r])


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of a point set (-1 for the empty set)."""
    if not points:
        return -1
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]]) if len(points) > 1 else 0


def gram_det(vectors: Sequence[Sequence]) -> Fraction:
    """det(V V^T): the squared volume of the parallelepiped spanned by the rows of V."""
    g = [[sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0)) for v in vectors] for u in vectors]
    return det(g)


def integer_row_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the integer lattice spanned by integer rows (Hermite-style row reduction)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    basis: list[list[int]] = []
    for c in range(ncols):
        live = [r for r in a if r[c] != 0]
        rest = [r for r in a if r[c] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[c] // p[c]
                r = [x - q * y for x, y in zip(r, p)]
                (nxt if r[c] != 0 else rest).append(r)
            live = nxt
        if live:
            basis.append(live[0])
        a = [r for r in rest if any(r)]
        if not a:
            break
    return basis


def lattice_gram_det(generators: Sequence[Sequence]) -> Fraction:
    """Gram determinant of the lattice generated by rational vectors."""
    gens = [[Fraction(x) for x in g] for g in generators]
    if not gens:
        return Fraction(1)
    ints, d = scale_to_int(gens)
    basis = integer_row_basis(ints)
    return gram_det(basis) / Fraction(d) ** (2 * len(basis))


def in_convex_hull(point: Sequence, points: Sequence[Sequence]) -> bool:
    """Exact test whether ``point`` is a convex combination of ``points``.

    Phase-one simplex with Bland's rule over Fractions; fine for the few
    hundred points that appear at desk scale.
    """
    if not points:
        return False
    dim = len(point)
    m = dim + 1
    nvars = len(points)
    # rows: coordinates, then the convexity row
    a = [[Fraction(points[k][i]) for k in range(nvars)] for i in range(dim)]
    a.append([Fraction(1)] * nvars)
    b = [Fraction(x) for x in point] + [Fraction(1)]
    for i in range(m):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]
    # tableau with artificials nvars .. nvars+m-1
    tab = [a[i] + [Fraction(int(i == k)) for k in range(m)] + [b[i]] for i in range(m)]
    basis = [nvars + i for i in range(m)]
    width = nvars + m
    cost = [Fraction(0)] * nvars + [Fraction(1)] * m
    while True:
        # reduced costs of the phase-one objective
        reduced = [cost[j] - sum((cost[basis[i]] * tab[i][j] for i in range(m)), Fraction(0))
                   for j in range(width)]
        enter = next((j for j in range(width) if reduced[j] < 0), None)
        if enter is None:
            break
        ratios = [(tab[i][-1] / tab[i][enter], basis[i], i) for i in range(m) if tab[i][enter] > 0]
        if not ratios:
            break
        _, _, leave = min(ratios)
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        basis[leave] = enter
    infeas = sum((tab[i][-1] for i in range(m) if basis[i] >= nvars), Fraction(0))
    return infeas == 0


def hull_vertices(points: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Vertices of conv(points): the distinct points not in the hull of the others."""
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    return [p for k, p in enumerate(pts) if not in_convex_hull(p, pts[:k] + pts[k + 1:])]

