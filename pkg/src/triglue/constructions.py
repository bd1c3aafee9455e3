"""Generators for the triangulation families used throughout the library.

Sphere families:

* :func:`pillow` -- two simplices glued along all ridges by the identity;
* :func:`sphere_even` -- pillow plus repeated 0-2 vertex moves, an
  ``f``-facet sphere with ``f/2 + d`` vertices for even ``f``;
* :func:`snapped_ball` -- one simplex with successive ridge pairs folded
  over their common face, identifying label pairs (0 1), (2 3), ...;
* :func:`sphere_odd` -- snapped balls chained in a cycle, an ``f``-facet
  odd-dimensional sphere with ``f + (d-1)/2`` vertices.

Pseudomanifold families (dimension 4):

* :func:`ds1` / :func:`ds2` -- one-pentachoron balls whose dual graph is a
  double loop; :func:`tripod` -- three ``ds2`` spikes on a central
  pentachoron, two slots left free;
* :func:`p4`, :func:`p3`, :func:`p3_nl`, :func:`p2` -- closed series built
  from double-loop spikes arranged around trees and cycles.  These exceed
  the even-dimensional vertex bound ``f_0 <= f_d/2 + d`` for large enough
  parameters while keeping every triangle link a single cycle.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from . import permutation as perm_mod
from .moves import zero_two_vertex_move
from .triangulation import Triangulation


class _Assembler:
    """Accumulates facets and gluings, then builds once."""

    def __init__(self, dim: int):
        self.dim = dim
        self.size = 0
        self.gluings: List[Tuple[int, int, int, Tuple[int, ...]]] = []

    def add_facets(self, count: int) -> int:
        first = self.size
        self.size += count
        return first

    def join(self, facet: int, ridge: int, other_facet: int,
             perm: Sequence[int]) -> None:
        self.gluings.append((facet, ridge, other_facet, tuple(perm)))

    def insert(self, t: Triangulation) -> int:
        offset = self.add_facets(t.size)
        for g in t.gluings():
            self.gluings.append(
                (g.facet + offset, g.ridge, g.other_facet + offset, g.perm))
        return offset

    def build(self) -> Triangulation:
        return Triangulation(self.dim, self.size, self.gluings)


def pillow(dim: int) -> Triangulation:
    """Two ``dim``-simplices glued along all their ridges by the identity."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    ident = perm_mod.identity(dim + 1)
    asm = _Assembler(dim)
    asm.add_facets(2)
    for ridge in range(dim + 1):
        asm.join(0, ridge, 1, ident)
    return asm.build()


def sphere_even(dim: int, facets: int) -> Triangulation:
    """A ``facets``-facet sphere with ``facets/2 + dim`` vertices.

    Starts from the pillow and repeatedly expands the first glued ridge of
    the newest facet by a 0-2 vertex move; ``facets`` must be even.
    """
    if facets < 2 or facets % 2 != 0:
        raise ValueError("facet count must be even and at least 2")
    if dim < 2 and facets > 2:
        raise ValueError("vertex moves need dimension at least 2")
    t = pillow(dim)
    for _ in range((facets - 2) // 2):
        t = zero_two_vertex_move(t, t.size - 1, 0)
    return t


def snapped_ball(dim: int, folds: int) -> Triangulation:
    """A single ``dim``-simplex with ``folds`` ridge pairs folded together.

    Fold ``j`` glues the ridges opposite vertices ``2j + 1`` and ``2j``
    over their common face, identifying those two vertices; the result is
    a ball with ``dim + 1 - folds`` vertices and ``folds`` dual loops.
    """
    if not 1 <= folds <= (dim + 1) // 2:
        raise ValueError(f"fold count must lie in 1..{(dim + 1) // 2}")
    asm = _Assembler(dim)
    asm.add_facets(1)
    for j in range(folds):
        asm.join(0, 2 * j + 1, 0, perm_mod.transposition(dim + 1, 2 * j, 2 * j + 1))
    return asm.build()


def sphere_odd(dim: int, facets: int) -> Triangulation:
    """An odd-dimensional ``facets``-facet sphere with ``facets + (dim-1)/2``
    vertices: maximally folded balls glued apex-over-apex in a cycle."""
    if dim < 1 or dim % 2 == 0:
        raise ValueError("dimension must be odd")
    if facets < 1:
        raise ValueError("facet count must be at least 1")
    folds = (dim - 1) // 2
    asm = _Assembler(dim)
    asm.add_facets(facets)
    for c in range(facets):
        for j in range(folds):
            asm.join(c, 2 * j + 1, c, perm_mod.transposition(dim + 1, 2 * j, 2 * j + 1))
    swap_apices = perm_mod.transposition(dim + 1, dim - 1, dim)
    for c in range(facets):
        asm.join(c, dim, (c + 1) % facets, swap_apices)
    return asm.build()


def _add_ds2_gluings(asm: _Assembler, facet: int) -> None:
    asm.join(facet, 0, facet, (2, 1, 0, 3, 4))
    asm.join(facet, 1, facet, (0, 3, 2, 1, 4))


def ds1() -> Triangulation:
    """One pentachoron, two folds, one vertex in the boundary sphere."""
    asm = _Assembler(4)
    asm.add_facets(1)
    asm.join(0, 2, 0, (3, 2, 0, 1, 4))
    asm.join(0, 1, 0, (0, 3, 2, 1, 4))
    return asm.build()


def ds2() -> Triangulation:
    """One pentachoron, two folds, two vertices in the boundary sphere."""
    asm = _Assembler(4)
    asm.add_facets(1)
    _add_ds2_gluings(asm, 0)
    return asm.build()


def tripod() -> Triangulation:
    """Three ``ds2`` spikes glued to a central pentachoron, two free slots."""
    asm = _Assembler(4)
    asm.add_facets(4)
    for i in range(3):
        _add_ds2_gluings(asm, i)
    asm.join(0, 4, 3, (0, 1, 2, 4, 3))
    asm.join(1, 4, 3, (0, 1, 4, 3, 2))
    asm.join(2, 4, 3, (0, 3, 2, 4, 1))
    return asm.build()


def p3(k: int) -> Triangulation:
    """``k`` tripods chained in a cycle: ``4k`` pentachora, ``3k + 1``
    vertices, one non-spherical edge link."""
    if k < 1:
        raise ValueError("cycle length must be at least 1")
    asm = _Assembler(4)
    for _ in range(k):
        base = asm.add_facets(4)
        for i in range(3):
            _add_ds2_gluings(asm, base + i)
        asm.join(base + 0, 4, base + 3, (0, 1, 2, 4, 3))
        asm.join(base + 1, 4, base + 3, (0, 1, 4, 3, 2))
        asm.join(base + 2, 4, base + 3, (0, 3, 2, 4, 1))
    for i in range(1, k):
        asm.join(4 * i - 1, 4, 4 * i + 3, (2, 1, 4, 3, 0))
    closing = (2, 1, 4, 3, 0) if k % 2 == 0 else (4, 1, 2, 3, 0)
    asm.join(4 * k - 1, 4, 3, closing)
    return asm.build()


def p3_nl(k: int) -> Triangulation:
    """Loopless variant of :func:`p3`: every spike loop expanded by a 0-2
    vertex move, giving ``16k`` pentachora and ``9k + 1`` vertices."""
    t = p3(k)
    for i in range(4 * k):
        if i % 4 != 3:
            t = zero_two_vertex_move(t, i, 0)
            t = zero_two_vertex_move(t, i, 1)
    return t


def _full_branch(k: int) -> Triangulation:
    # One branch of the 5-regular tree: a root pentachoron carrying four
    # sub-branches (or four ds2 spikes at the deepest level), its ridge 4
    # left free for the parent.
    asm = _Assembler(4)
    asm.add_facets(1)
    if k == 2:
        asm.add_facets(4)
        for i in range(1, 5):
            _add_ds2_gluings(asm, i)
    else:
        for _ in range(4):
            asm.insert(_full_branch(k - 1))
    child = (4 ** (k - 1) - 1) // 3
    asm.join(0, 3, 1, (0, 1, 2, 4, 3))
    asm.join(0, 2, 1 + child, (0, 1, 4, 3, 2))
    asm.join(0, 1, 1 + 2 * child, (0, 4, 2, 3, 1))
    asm.join(0, 0, 1 + 3 * child, (4, 1, 2, 3, 0))
    return asm.build()


def p4(k: int) -> Triangulation:
    """A depth-``k`` 5-regular tree of pentachora capped with ``ds2``
    spikes: ``6 + 20 * (4^(k-1) - 1) / 3`` pentachora."""
    if k < 1:
        raise ValueError("depth must be at least 1")
    asm = _Assembler(4)
    asm.add_facets(1)
    if k == 1:
        asm.add_facets(5)
        for i in range(1, 6):
            _add_ds2_gluings(asm, i)
        child = 1
    else:
        for _ in range(5):
            asm.insert(_full_branch(k))
        child = (4 ** k - 1) // 3
    asm.join(0, 4, 1, (0, 1, 2, 3, 4))
    asm.join(0, 3, 1 + child, (0, 1, 2, 4, 3))
    asm.join(0, 2, 1 + 2 * child, (0, 1, 4, 3, 2))
    asm.join(0, 1, 1 + 3 * child, (0, 4, 2, 3, 1))
    asm.join(0, 0, 1 + 4 * child, (4, 1, 2, 3, 0))
    return asm.build()


def p2(k: int) -> Triangulation:
    """``2k`` two-spike components in a cycle alternating double and single
    dual arcs: ``6k`` pentachora and ``4k + 1`` vertices.

    Every second hub glues its ridges 2 and 3 to the hub ahead and ridge 4
    to the hub behind, all by the identity: the unique choice (up to a
    label symmetry) keeping the series 2-nonsingular with a single
    non-spherical edge link of genus ``2k - 2``.
    """
    if k < 1:
        raise ValueError("cycle length parameter must be at least 1")
    ident = perm_mod.identity(5)
    asm = _Assembler(4)
    for i in range(0, 6 * k, 3):
        asm.add_facets(3)
        _add_ds2_gluings(asm, i + 1)
        _add_ds2_gluings(asm, i + 2)
        asm.join(i, 1, i + 1, (0, 4, 2, 3, 1))
        asm.join(i, 0, i + 2, (4, 1, 2, 3, 0))
    for i in range(0, 6 * k, 6):
        asm.join(i, 2, (i + 3) % (6 * k), ident)
        asm.join(i, 3, (i + 3) % (6 * k), ident)
        asm.join(i, 4, (i - 3) % (6 * k), ident)
    return asm.build()
