"""Command-line entry point.

Exit codes: 0 success / check true, 1 check failed (witness printed),
2 usage or format error.  Every result is one JSON object per stdout line.
"""
from __future__ import annotations

import argparse
import sys

from . import gallery, graphs
from .basepoly import graph_polytope
from .combinatorics import belts, f_vector, is_primitive, isomorphism, type_fingerprint
from .exact import RationalFormatError, format_rational, parse_rational
from .graphs import GraphError, elements
from .io import (FormatError, dumps, gallery_to_json, graph_from_json, load_json,
                 polytope_from_json, polytope_to_json, setfunction_from_json,
                 tiling_report_to_json, write_json)
from .roots import unimodularity_witness
from .setfunctions import submodular_witness
from .zonotope import (base_polytope_mismatch, generators, nrd, tiling_check,
                       zonotope_polytope)


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(dumps(obj))


def _fmt_vec(v):
    return [format_rational(x) for x in v]


def _load_graph(path):
    return graph_from_json(load_json(path))


def cmd_build(args) -> int:
    g = _load_graph(args.graph)
    diff = base_polytope_mismatch(g)
    if diff:
        _emit({"ok": False, "diff": [_fmt_vec(v) for v in diff]})
        return 1
    p = graph_polytope(g)
    out = polytope_to_json(p, approx=args.approx)
    if args.out:
        write_json(args.out, out)
        _emit({"ok": True, "out": args.out, "vertices": len(p.vertices), "facets": len(p.facets)})
    else:
        _emit(out)
    return 0


def cmd_inspect(args) -> int:
    p = polytope_from_json(load_json(args.input))
    if args.what == "vertices":
        _emit({"vertices": [_fmt_vec(v) for v in p.vertices]})
    elif args.what == "facets":
        _emit({"facets": [{"S": elements(s), "beta": format_rational(b)} for s, b in p.facets]})
    elif args.what == "belts":
        _emit({"belts": [{"facets": list(b.facets), "length": b.length} for b in belts(p)]})
    else:
        _emit({"f_vector": list(f_vector(p))})
    return 0


def cmd_check(args) -> int:
    if args.what == "submodular":
        if not args.fn:
            raise UsageError("check submodular needs --fn")
        f = setfunction_from_json(load_json(args.fn))
        w = submodular_witness(f)
        _emit({"submodular": w is None, "witness": None if w is None else [elements(w[0]), elements(w[1])]})
        return 0 if w is None else 1
    if args.what == "unimodular":
        if not args.vectors:
            raise UsageError("check unimodular needs --vectors")
        data = load_json(args.vectors)
        vecs = data["vectors"] if isinstance(data, dict) else data
        if not all(isinstance(x, int) for v in vecs for x in v):
            raise FormatError("vectors must be lists of integers")
        w = unimodularity_witness(vecs)
        witness = None if w is None else {
            "basis": [list(b) for b in w[0]], "vector": list(w[1]),
            "coordinates": None if w[2] is None else _fmt_vec(w[2])}
        _emit({"unimodular": w is None, "witness": witness})
        return 0 if w is None else 1
    if not args.graph:
        raise UsageError(f"check {args.what} needs --graph")
    g = _load_graph(args.graph)
    p = zonotope_polytope(g)
    if args.what == "tiling":
        report = tiling_check(p, generators(g), g)
        out = tiling_report_to_json(report)
        if report.failures:
            out["failures"] = report.failures
        _emit(out)
        return 0 if report.tiles else 1
    ok = is_primitive(p)
    _emit({"primitive": ok, "facets": len(p.facets), "dim": p.dim})
    return 0 if ok else 1


def cmd_type(args) -> int:
    if not args.graph or len(args.graph) != 2:
        raise UsageError("type needs exactly two --graph files")
    p1, p2 = (zonotope_polytope(_load_graph(f)) for f in args.graph)
    iso = isomorphism(p1, p2)
    _emit({"same_type": iso is not None,
           "fingerprints": [type_fingerprint(p1).digest, type_fingerprint(p2).digest]})
    return 0 if iso is not None else 1


def _weights_arg(args):
    if args.weights:
        data = load_json(args.weights)
        ws = data["weights"] if isinstance(data, dict) else data
        return [parse_rational(str(w)) for w in ws]
    return parse_rational(args.a) if args.a else 1


def cmd_gallery(args) -> int:
    b = _weights_arg(args)
    if args.name == "permutohedron":
        if isinstance(b, list):
            raise UsageError("permutohedron takes a single weight --a")
        item = gallery.permutohedron(args.n, b)
    elif args.name == "voronoi-an":
        item = gallery.voronoi_an(args.n, b)
    elif args.name == "tree-box":
        t = _load_graph(args.graph) if args.graph else graphs.path(args.n, b)
        item = gallery.tree_box(t)
    else:
        item = gallery.star_box(args.n, b)
    out = gallery_to_json(item)
    checks = gallery.verify(item)
    if args.out:
        write_json(args.out, out)
        _emit({"ok": all(checks.values()), "out": args.out, "vertices": len(item.polytope.vertices),
               "facets": len(item.polytope.facets), "checks": checks})
    else:
        out["checks"] = checks
        _emit(out)
    return 0 if all(checks.values()) else 1


def cmd_nrd(args) -> int:
    g = _load_graph(args.graph)
    _emit({"nrd": nrd(g), "edges": g.m})
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cutpoly", description="Exact cut-function zonotopes and base polytopes")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="graph -> polytope JSON, cross-checked by both routes")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.add_argument("--approx", action="store_true", help="add non-authoritative decimal vertices")
    p.set_defaults(func=cmd_build)

    for what in ("vertices", "facets", "belts", "fvector"):
        p = sub.add_parser(what, help=f"print the {what} of a polytope file")
        p.add_argument("--in", dest="input", required=True)
        p.set_defaults(func=cmd_inspect, what=what)

    p = sub.add_parser("check", help="boolean checks with witnesses")
    p.add_argument("what", choices=["submodular", "unimodular", "tiling", "primitive"])
    p.add_argument("--fn")
    p.add_argument("--vectors")
    p.add_argument("--graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("type", help="compare the combinatorial types of two graph zonotopes")
    p.add_argument("--graph", action="append")
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("gallery", help="named constructions")
    p.add_argument("name", choices=["permutohedron", "voronoi-an", "tree-box", "star-box"])
    p.add_argument("--n", type=int, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--a", help="uniform weight p/q")
    grp.add_argument("--weights", help="JSON list of per-edge weights")
    p.add_argument("--graph", help="spanning tree for tree-box")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("nrd", help="type-domain dimension (edge count)")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_nrd)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, FormatError, RationalFormatError, GraphError, OSError, ValueError, KeyError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"cutpoly: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
