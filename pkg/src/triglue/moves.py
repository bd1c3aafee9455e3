"""Local modifications: 0-2 / 2-0 vertex moves and loop removal.

A 0-2 vertex move inserts a two-facet pillow with an interior vertex into
the space of an interior ridge: it adds two facets and one vertex, and
preserves the underlying space.  The 2-0 move is its inverse.  Expanding
one ridge of every dual-graph loop turns each loop into a three-node
"ringpull" (single arc, d-fold arc, single arc), leaving the vertex-count
deviation and the branching number unchanged.
"""

from __future__ import annotations

from typing import List, NamedTuple

from . import permutation as perm_mod
from .triangulation import GluingError, Triangulation


def zero_two_vertex_move(t: Triangulation, facet: int, ridge: int) -> Triangulation:
    """Expand the interior ridge at ``(facet, ridge)`` with a vertex pillow.

    The slot keeps its index; the two new facets take indices ``size`` and
    ``size + 1``.  Facet and vertex counts grow by two and one.
    """
    if t.dim < 2:
        raise ValueError("0-2 vertex moves need dimension at least 2")
    got = t.gluing(facet, ridge)
    if got is None:
        raise GluingError(f"ridge slot {(facet, ridge)} is not glued")
    adj_facet, adj_ridge, p = got

    new1 = t.size
    new2 = t.size + 1
    ident = perm_mod.identity(t.dim + 1)
    out = Triangulation(t.dim, t.size + 2,
                        [(g.facet, g.ridge, g.other_facet, g.perm)
                         for g in t.gluings()
                         if (g.facet, g.ridge) != (facet, ridge)
                         and (g.facet, g.ridge) != (adj_facet, adj_ridge)])
    out = out.join_perm(facet, ridge, new1, ident)
    out = out.join_perm(new2, ridge, adj_facet, p)
    for r in range(t.dim + 1):
        if r != ridge:
            out = out.join_perm(new1, r, new2, ident)
    return out


class TwoZeroSite(NamedTuple):
    """A removable vertex pillow: facets ``a < b`` glued to each other by
    the identity along every ridge except ``ridge``."""

    a: int
    b: int
    ridge: int


def find_two_zero_sites(t: Triangulation) -> List[TwoZeroSite]:
    """All sites where a 2-0 vertex move legally applies.

    Requires the exact inverse pattern of a 0-2 move: identity gluings on
    all but one ridge index, both remaining slots glued outside the pair,
    and the enclosed vertex interior to the pillow (degree two).
    """
    d = t.dim
    ident = perm_mod.identity(d + 1)
    sites = []
    lattice = t.face_lattice()
    for a in range(t.size):
        partners = set()
        for r in range(d + 1):
            got = t.gluing(a, r)
            if got is not None and got[0] > a:
                partners.add(got[0])
        for b in sorted(partners):
            mismatch = [r for r in range(d + 1)
                        if t.gluing(a, r) != (b, r, ident)]
            if len(mismatch) != 1:
                continue
            x = mismatch[0]
            got_a, got_b = t.gluing(a, x), t.gluing(b, x)
            if got_a is None or got_b is None:
                continue
            if got_a[0] in (a, b) or got_b[0] in (a, b):
                continue
            enclosed = lattice.class_of(a, (x,))
            if set(enclosed.embeddings) != {(a, (x,)), (b, (x,))}:
                continue
            sites.append(TwoZeroSite(a, b, x))
    return sites


def two_zero_vertex_move(t: Triangulation, site: TwoZeroSite) -> Triangulation:
    """Collapse the vertex pillow at ``site``, the inverse of a 0-2 move.

    The two pillow facets disappear (higher indices shift down) and their
    outside gluings are composed into one.
    """
    if site not in find_two_zero_sites(t):
        raise GluingError(f"no removable vertex pillow at {site}")
    a, b, x = site
    pa_facet, pa_ridge, pa = t.gluing(a, x)    # a -> outside
    pb_facet, pb_ridge, pb = t.gluing(b, x)    # b -> outside

    def relabel(f: int) -> int:
        return f - (f > a) - (f > b)

    gluings = []
    for g in t.gluings():
        if g.facet in (a, b) or g.other_facet in (a, b):
            continue
        gluings.append((relabel(g.facet), g.ridge, relabel(g.other_facet), g.perm))
    # Route the two outside gluings through the collapsed pillow: the
    # a-side partner meets the b-side partner via a's labels (a and b are
    # identified by the identity).
    comp = perm_mod.compose(pb, perm_mod.invert(pa))
    gluings.append((relabel(pa_facet), pa_ridge, relabel(pb_facet), comp))
    return Triangulation(t.dim, t.size - 2, gluings)


def remove_loops(t: Triangulation) -> Triangulation:
    """Expand one ridge of every dual-graph loop by a 0-2 vertex move.

    The result triangulates the same space with a loopless dual graph.
    Needs a closed, connected triangulation of even dimension; loopless
    input is returned unchanged.
    """
    if t.dim % 2 != 0:
        raise ValueError("loop removal is defined for even dimensions")
    if not t.is_closed():
        raise ValueError("loop removal needs a closed triangulation")
    if not t.is_connected():
        raise ValueError("loop removal needs a connected triangulation")
    loops = sorted((g.facet, min(g.ridge, g.other_ridge))
                   for g in t.gluings() if g.is_loop)
    out = t
    for facet, ridge in loops:
        out = zero_two_vertex_move(out, facet, ridge)
    return out
