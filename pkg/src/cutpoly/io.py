"""JSON formats for graphs, set functions, polytopes, tiling reports and gallery bundles.

Rationals are always written as ``"p/q"`` strings in lowest terms with q > 0.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .basepoly import Polytope
from .exact import format_rational, parse_rational, to_fraction
from .graphs import Graph, elements, mask_of
from .setfunctions import SetFunction, canonical_values, from_canonical


class FormatError(ValueError):
    pass


def _require(obj, key):
    try:
        return obj[key]
    except (KeyError, TypeError):
        raise FormatError(f"missing field {key!r}") from None


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [{"i": i, "j": j, "b": format_rational(b)} for i, j, b in g.edges]}


def graph_from_json(obj: dict) -> Graph:
    n = _require(obj, "n")
    if not isinstance(n, int):
        raise FormatError("n must be an integer")
    edges = []
    for e in _require(obj, "edges"):
        edges.append((_require(e, "i"), _require(e, "j"), to_fraction(_require(e, "b"))))
    return Graph.from_edges(n, edges)


def setfunction_to_json(f: SetFunction) -> dict:
    """Only canonical masks (0 not in S) when f is symmetric, every mask otherwise."""
    if f.is_symmetric():
        values = canonical_values(f)
    else:
        values = {s: v for s, v in enumerate(f.values) if s}
    return {"n": f.n, "values": {str(s): format_rational(v) for s, v in values.items()}}


def setfunction_from_json(obj: dict) -> SetFunction:
    n = _require(obj, "n")
    raw = _require(obj, "values")
    try:
        values = {int(k): parse_rational(v) for k, v in raw.items()}
    except (AttributeError, ValueError) as exc:
        raise FormatError(f"bad set function values: {exc}") from None
    return from_canonical(n, values)


def polytope_to_json(p: Polytope, approx: bool = False) -> dict:
    out = {
        "n": p.n,
        "dim": p.dim,
        "vertices": [[format_rational(x) for x in v] for v in p.vertices],
        "facets": [{"S": elements(s), "beta": format_rational(b)} for s, b in p.facets],
        "incidence": [[int(x) for x in row] for row in p.incidence],
    }
    if approx:
        out["approx_vertices_non_authoritative"] = [[float(x) for x in v] for v in p.vertices]
    return out


def polytope_from_json(obj: dict) -> Polytope:
    vertices = tuple(tuple(parse_rational(x) for x in v) for v in _require(obj, "vertices"))
    facets = tuple((mask_of(_require(f, "S")), parse_rational(_require(f, "beta")))
                   for f in _require(obj, "facets"))
    incidence = tuple(tuple(bool(x) for x in row) for row in _require(obj, "incidence"))
    if len(incidence) != len(vertices) or any(len(r) != len(facets) for r in incidence):
        raise FormatError("incidence table shape does not match vertices x facets")
    return Polytope(_require(obj, "n"), _require(obj, "dim"), vertices, facets, incidence)


def tiling_report_to_json(report) -> dict:
    return {
        "central_symmetry": report.central_symmetry,
        "facet_symmetry": report.facet_symmetry,
        "belts": [{"facets": list(b.facets), "length": b.length} for b in report.belts],
        "vol_squared": format_rational(report.vol_squared),
        "lattice_gram_det": format_rational(report.lattice_gram_det),
        "tiles": report.tiles,
    }


def _plain(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


def gallery_to_json(item) -> dict:
    return {
        "name": item.name,
        "params": _plain(item.params),
        "graph": graph_to_json(item.graph),
        "polytope": polytope_to_json(item.polytope),
        "expected": _plain(item.expected),
    }


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def load_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=1) + "\n")
