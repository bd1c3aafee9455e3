"""Reference regression table for the built-in families.

Each row re-computes a published reference value (an f-vector, a count, a
link genus, a bound verdict) and compares exactly.  The CLI's
``verify-paper`` subcommand prints one pass/fail line per row.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, List, Tuple

from . import analysis, constructions as con, dualgraph, tableio
from .dualgraph import Multigraph

Row = Tuple[str, bool, str]


def _row(name: str, got, expected) -> Row:
    return (name, got == expected, f"got {got}, expected {expected}")


def _fvec_rows() -> Iterator[Row]:
    yield _row("f-vector ds1", con.ds1().f_vector(), (2, 3, 4, 3, 1))
    yield _row("f-vector ds2", con.ds2().f_vector(), (3, 5, 5, 3, 1))
    yield _row("f-vector pillow d=4", con.pillow(4).f_vector(), (5, 10, 10, 5, 2))
    yield _row("f-vector p4(1)", con.p4(1).f_vector(), (6, 13, 18, 15, 6))
    yield _row("tripod size/loops",
               (con.tripod().size, dualgraph.dual_graph(con.tripod()).loop_count),
               (4, 6))


def _series_rows() -> Iterator[Row]:
    for k in range(1, 5):
        t = con.p3(k)
        yield _row(f"p3({k}) facets/vertices",
                   (t.f_vector()[4], t.f_vector()[0]), (4 * k, 3 * k + 1))
    for k in range(1, 5):
        t = con.p2(k)
        yield _row(f"p2({k}) facets/vertices",
                   (t.f_vector()[4], t.f_vector()[0]), (6 * k, 4 * k + 1))
    for k in (1, 2):
        t = con.p4(k)
        cells = 6 + 20 * sum(4 ** i for i in range(k - 1))
        verts = 6 + 15 * sum(4 ** i for i in range(k - 1))
        yield _row(f"p4({k}) facets/vertices",
                   (t.f_vector()[4], t.f_vector()[0]), (cells, verts))
    for k in (1, 2, 4):
        t = con.p3_nl(k)
        yield _row(f"p3nl({k}) facets/vertices",
                   (t.f_vector()[4], t.f_vector()[0]), (16 * k, 9 * k + 1))


def _link_rows() -> Iterator[Row]:
    for k, name in ((3, "p3(3)"), (4, "p3(4)")):
        rep = analysis.classify(con.p3(k))
        bad = [s for s in rep.link_summaries[1] if not s.sphere]
        got = [(s.orientable, s.genus) for s in bad]
        yield _row(f"{name} singular edge links", got, [(True, k - 1)])
        bad_v = sum(1 for s in rep.link_summaries[0] if not s.sphere)
        yield _row(f"{name} singular vertex links", bad_v, 1)
        yield _row(f"{name} triangle links all cycles",
                   rep.nonsingularity[2].holds, True)
    rep = analysis.classify(con.p2(2))
    bad = [s for s in rep.link_summaries[1] if not s.sphere]
    yield _row("p2(2) singular edge links",
               [(s.orientable, s.genus) for s in bad], [(True, 2)])


def _bound_rows() -> Iterator[Row]:
    yield _row("pillow d=4 bound status",
               analysis.conjecture_check(con.pillow(4)).status, "satisfied")
    yield _row("pillow d=4 delta", analysis.delta(con.pillow(4)), Fraction(4))
    for name, t in (("p3(4)", con.p3(4)), ("p4(2)", con.p4(2)),
                    ("p2(4)", con.p2(4)), ("p3nl(4)", con.p3_nl(4))):
        yield _row(f"{name} bound status",
                   analysis.conjecture_check(t).status, "violated")
    yield _row("sphere_even(4,12) delta",
               analysis.delta(con.sphere_even(4, 12)), Fraction(4))
    for d in (1, 3, 5):
        ok = all(con.sphere_odd(d, f).f_vector()[0] == f + (d - 1) // 2
                 for f in range(1, 6))
        yield _row(f"sphere_odd({d},f) vertex count sharp", ok, True)


def _residual_rows() -> Iterator[Row]:
    yield _row("pillow d=4 residuals",
               analysis.dehn_sommerville_check(con.pillow(4)), (0, 0, 0))
    yield _row("sphere_even(4,10) residuals",
               analysis.dehn_sommerville_check(con.sphere_even(4, 10)), (0, 0, 0))
    # A single edge link of genus g shifts the middle residual to 2g.
    yield _row("p3(4) residuals", analysis.dehn_sommerville_check(con.p3(4)),
               (0, 6, 0))
    yield _row("p4(1) residuals", analysis.dehn_sommerville_check(con.p4(1)),
               (0, 2, 0))


def _graph_rows() -> Iterator[Row]:
    rep = dualgraph.theorem_bound_check(con.pillow(4))
    yield _row("pillow d=4 branching bound",
               (rep.branch, rep.bound, rep.holds), (2, 4, True))
    rep = dualgraph.theorem_bound_check(con.p3(4))
    yield _row("p3(4) branching bound holds", rep.holds, True)
    rng = random.Random(20240913)
    ok = True
    for _ in range(20):
        n = rng.randint(2, 7)
        arcs = [(i, rng.randrange(i)) for i in range(1, n)]
        arcs += [(rng.randrange(n), rng.randrange(n)) for _ in range(n)]
        arcs = [a for a in arcs if a[0] != a[1]]
        g = Multigraph(n, arcs)
        if dualgraph.branching_number(g) != dualgraph.crit_bruteforce(g):
            ok = False
            break
    yield _row("branching number equals exhaustive crit", ok, True)


def _roundtrip_rows() -> Iterator[Row]:
    samples = {
        "pillow(4)": con.pillow(4),
        "ds2": con.ds2(),
        "p3(4)": con.p3(4),
        "sphere_odd(5,6)": con.sphere_odd(5, 6),
        "sphere_even(4,8)": con.sphere_even(4, 8),
    }
    for name, t in samples.items():
        text = tableio.serialize(t)
        ok = tableio.parse(text) == t and tableio.serialize(tableio.parse(text)) == text
        yield _row(f"round-trip {name}", ok, True)


def reference_rows() -> List[Row]:
    rows: List[Row] = []
    for gen in (_fvec_rows, _series_rows, _link_rows, _bound_rows,
                _residual_rows, _graph_rows, _roundtrip_rows):
        rows.extend(gen())
    return rows
