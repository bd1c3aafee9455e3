"""Command-line interface.

Subcommands build the library's triangulation families, analyse gluing
tables, compute links and dual graphs, apply vertex moves, run the bound
checks, enumerate small censuses, and re-verify the published reference
values for the built-in families.  Triangulations travel between
subcommands as gluing-table text on stdin/stdout.

Exit codes: 0 ok, 1 check failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import analysis, constructions, dualgraph, moves, tableio
from .links import link
from .triangulation import GluingError, Triangulation

REPORT_SCHEMA = "triglue/report/1"

_FAMILIES = {
    "pillow": (constructions.pillow, 1),
    "sphere-even": (constructions.sphere_even, 2),
    "sphere-odd": (constructions.sphere_odd, 2),
    "snapped-ball": (constructions.snapped_ball, 2),
    "ds1": (constructions.ds1, 0),
    "ds2": (constructions.ds2, 0),
    "tripod": (constructions.tripod, 0),
    "p4": (constructions.p4, 1),
    "p3": (constructions.p3, 1),
    "p3nl": (constructions.p3_nl, 1),
    "p2": (constructions.p2, 1),
}


class CheckFailure(Exception):
    pass


def _read_triangulation(path: str) -> Triangulation:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return tableio.parse(text)


def _write_text(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _frac(x: Fraction) -> str:
    return str(x)


def _report(t: Triangulation) -> dict:
    rep = {
        "schema": REPORT_SCHEMA,
        "dim": t.dim,
        "facets": t.size,
        "f_vector": list(t.f_vector()),
        "euler": t.euler_characteristic(),
        "closed": t.is_closed(),
        "connected": t.is_connected(),
        "valid": t.is_valid(),
        "boundary_ridges": len(t.boundary_ridges()),
    }
    if rep["valid"]:
        rep["orientable"] = analysis.orientability(t)
        h = analysis.homology(t)
        rep["homology"] = [{"betti": b, "torsion": list(tor)}
                           for b, tor in zip(h.betti, h.torsion)]
    if rep["closed"]:
        rep["delta"] = _frac(analysis.delta(t))
    if rep["closed"] and rep["connected"]:
        vb = analysis.conjecture_check(t)
        rep["vertex_bound"] = {
            "bound": _frac(vb.bound), "case": vb.case,
            "proven": vb.proven, "status": vb.status,
        }
        if t.dim >= 1:
            cls = analysis.classify(t)
            rep["classification"] = {
                "pseudomanifold": cls.pseudomanifold,
                "nonsingularity": [
                    {"s": v.s, "holds": v.holds, "certainty": v.certainty,
                     "failing": list(v.failing)}
                    for v in cls.nonsingularity],
            }
    return rep


def _print_report(rep: dict) -> None:
    print(f"dimension        {rep['dim']}")
    print(f"facets           {rep['facets']}")
    print(f"f-vector         {tuple(rep['f_vector'])}")
    print(f"euler char       {rep['euler']}")
    print(f"closed           {rep['closed']}")
    print(f"connected        {rep['connected']}")
    print(f"valid            {rep['valid']}")
    print(f"boundary ridges  {rep['boundary_ridges']}")
    if "orientable" in rep:
        print(f"orientable       {rep['orientable']}")
        parts = []
        for i, h in enumerate(rep["homology"]):
            tor = "".join(f"+Z/{q}" for q in h["torsion"])
            parts.append(f"H{i}=Z^{h['betti']}{tor}")
        print(f"homology         {' '.join(parts)}")
    if "delta" in rep:
        print(f"delta            {rep['delta']}")
    if "vertex_bound" in rep:
        vb = rep["vertex_bound"]
        print(f"vertex bound     f0 <= {vb['bound']} [{vb['case']}] "
              f"{vb['status']}")
    if "classification" in rep:
        c = rep["classification"]
        print(f"pseudomanifold   {c['pseudomanifold']}")
        for v in c["nonsingularity"]:
            mark = "yes" if v["holds"] else f"no (faces {v['failing']})"
            print(f"  N_{v['s']:<2}           {mark} [{v['certainty']}]")


def _cmd_build(args) -> int:
    builder, arity = _FAMILIES[args.family]
    params = args.params
    if len(params) != arity:
        raise ValueError(
            f"family {args.family!r} takes {arity} integer parameter(s)")
    t = builder(*[int(p) for p in params])
    _write_text(tableio.serialize(t), args.output)
    return 0


def _cmd_analyze(args) -> int:
    t = _read_triangulation(args.file)
    rep = _report(t)
    if args.json:
        print(json.dumps(rep, sort_keys=True, indent=2))
    else:
        _print_report(rep)
    return 0


def _cmd_links(args) -> int:
    t = _read_triangulation(args.file)
    lat = t.face_lattice()
    if not 0 <= args.dim < t.dim:
        raise ValueError(f"--dim must lie in 0..{t.dim - 1}")
    classes = lat.faces(args.dim)
    if args.face is not None:
        classes = [classes[args.face]]
    for cls in classes:
        res = link(t, cls)
        lt = res.triangulation
        desc = f"{lt.size} facet(s), f-vector {lt.f_vector()}"
        if lt.dim == 0:
            kind = f"{lt.size} point(s)"
        elif lt.dim == 1:
            kind = "circle" if lt.is_closed() and lt.is_connected() else "curve"
        elif lt.dim == 2 and lt.is_closed() and lt.is_connected() and lt.is_valid():
            orient, genus = analysis.surface_type(lt)
            kind = f"{'orientable' if orient else 'non-orientable'} genus {genus}"
        else:
            kind = f"{lt.dim}-dimensional"
        print(f"face {cls.index} (dim {args.dim}, degree {cls.degree}): "
              f"{kind}; {desc}")
    return 0


def _cmd_dualgraph(args) -> int:
    t = _read_triangulation(args.file)
    g = dualgraph.dual_graph(t)
    if args.dot:
        separating = ()
        if args.decompose and g.is_connected():
            _, sep = dualgraph.block_decompositions(g)
            separating = sep.nodes
        sys.stdout.write(tableio.export_dot(g, separating=separating))
        return 0
    print(f"nodes {g.node_count}  arcs {len(g.arcs)}  loops {g.loop_count}")
    if args.decompose:
        if not g.is_connected():
            raise ValueError("decomposition needs a connected dual graph")
        cut, sep = dualgraph.block_decompositions(g)
        print(f"cut nodes        {list(cut.nodes)}")
        print(f"separating nodes {list(sep.nodes)}")
        print(f"non-separable components ({len(sep.components)}):")
        for i, comp in enumerate(sep.components):
            kind = "loop" if comp.is_loop else "block"
            print(f"  {i}: {kind} nodes {sorted(comp.nodes)} "
                  f"arcs {list(comp.arcs)}")
        print(f"branching number {dualgraph.branching_number(g)}")
    return 0


def _cmd_move(args) -> int:
    t = _read_triangulation(args.file)
    if args.kind == "02":
        out = moves.zero_two_vertex_move(t, args.facet, args.ridge)
    else:
        sites = [s for s in moves.find_two_zero_sites(t)
                 if args.facet in (s.a, s.b) and s.ridge == args.ridge]
        if not sites:
            print(f"no removable vertex pillow at facet {args.facet}, "
                  f"ridge {args.ridge}", file=sys.stderr)
            return 1
        out = moves.two_zero_vertex_move(t, sites[0])
    _write_text(tableio.serialize(out), args.output)
    return 0


def _cmd_check(args) -> int:
    t = _read_triangulation(args.file)
    failures = []
    if not t.is_closed():
        raise ValueError("check needs a closed triangulation")
    f = t.f_vector()
    print(f"f-vector {f}")
    if t.dim == 4 and t.is_valid():
        r = analysis.dehn_sommerville_check(t)
        edge_ok = all(s.sphere for s in
                      analysis.classify(t).link_summaries[1]) \
            if t.is_connected() else None
        print(f"face-count residuals {r}")
        if r[0] != 0 or r[2] != 0:
            failures.append("residuals")
        if edge_ok and r[1] != 0:
            failures.append("middle residual on spherical edge links")
    if t.is_connected():
        d = analysis.delta(t)
        vb = analysis.conjecture_check(t)
        eq = " (equality)" if Fraction(vb.f0) == vb.bound else ""
        print(f"delta {d}")
        print(f"vertex bound f0 <= {vb.bound}: {vb.status}{eq}")
        if t.dim % 2 == 0 and t.dim >= 2:
            rep = dualgraph.theorem_bound_check(t)
            print(f"branching bound: delta {rep.delta} <= {rep.bound} "
                  f"(branch {rep.branch}): "
                  f"{'ok' if rep.holds else 'VIOLATED'}")
            if not rep.holds:
                failures.append("branching bound")
            if rep.profile.final_cut != 0:
                failures.append("cut profile")
    if failures:
        print("FAILED: " + ", ".join(failures))
        return 1
    return 0


def _cmd_census(args) -> int:
    counts = {"total": 0, "connected_closed": 0, "valid": 0}
    surfaces = {}
    max_delta = None

    def visit(t: Triangulation) -> None:
        counts["total"] += 1
        if not t.is_connected():
            return
        counts["connected_closed"] += 1
        nonlocal max_delta
        d = analysis.delta(t)
        if max_delta is None or d > max_delta:
            max_delta = d
        if not t.is_valid():
            return
        counts["valid"] += 1
        if t.dim == 2:
            key = analysis.surface_type(t)
            surfaces[key] = surfaces.get(key, 0) + 1

    analysis.enumerate_closed(args.dim, args.facets, visit, force=args.force)
    print(f"census dim {args.dim}, {args.facets} facet(s): "
          f"{counts['total']} closed gluings")
    print(f"connected {counts['connected_closed']}, "
          f"of which valid {counts['valid']}")
    if max_delta is not None:
        print(f"max delta over connected outputs: {max_delta} "
              f"(bound {Fraction(args.facets, 2) + args.dim})")
    for (orient, genus), n in sorted(surfaces.items()):
        name = ("sphere" if (orient, genus) == (True, 0) else
                f"{'orientable' if orient else 'non-orientable'} genus {genus}")
        print(f"  surface {name}: {n}")
    return 0


def _verify_rows():
    from .verify import reference_rows
    return reference_rows()


def _cmd_verify(args) -> int:
    failed = 0
    for name, ok, detail in _verify_rows():
        mark = "ok  " if ok else "FAIL"
        print(f"{mark} {name}: {detail}")
        if not ok:
            failed += 1
    print(f"{'all passed' if not failed else f'{failed} row(s) failed'}")
    return 1 if failed else 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="triglue",
        description="Build and analyse generalised triangulations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit a built-in family as a gluing table")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("analyze", help="full analysis report of a gluing table")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("links", help="links of the faces of one dimension")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--face", type=int, default=None)
    p.set_defaults(func=_cmd_links)

    p = sub.add_parser("dualgraph", help="dual graph, decomposition, DOT export")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--decompose", action="store_true")
    p.set_defaults(func=_cmd_dualgraph)

    p = sub.add_parser("move", help="apply a 0-2 or 2-0 vertex move")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("kind", choices=["02", "20"])
    p.add_argument("facet", type=int)
    p.add_argument("ridge", type=int)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("check", help="face-count identities and vertex bounds")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("census", help="enumerate all closed gluings of a size")
    p.add_argument("dim", type=int)
    p.add_argument("facets", type=int)
    p.add_argument("--force", action="store_true",
                   help="override the desk-scale size guard")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify-paper",
                       help="re-verify the published reference values "
                            "for the built-in families")
    p.set_defaults(func=_cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except tableio.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (GluingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
