"""Gluing-table text format and DOT export.

The text format mirrors printed gluing tables: a header giving dimension
and facet count, then one line per gluing written from its
lexicographically smaller slot::

    # optional comments
    dim 4
    facets 2
    0 0 -> 1 (1234)

The parenthesised block lists the images of the ridge's corners in
increasing corner order, one label character each (``0``-``9`` then
lowercase letters for dimensions above nine).  Parsing and serialising
round-trip exactly; serialisation does not depend on construction order.
"""

from __future__ import annotations

from typing import Dict, Iterable, Optional, Sequence

from . import permutation as perm_mod
from .dualgraph import Multigraph
from .triangulation import GluingError, Triangulation

_LABELS = "0123456789abcdefghijklmnopqrstuvwxyz"


class ParseError(ValueError):
    """A gluing-table file is malformed; carries the offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _label(v: int) -> str:
    return _LABELS[v]


def serialize(t: Triangulation) -> str:
    """Canonical text form of a triangulation."""
    if t.dim + 1 > len(_LABELS):
        raise ValueError("dimension too large for label alphabet")
    lines = [f"dim {t.dim}", f"facets {t.size}"]
    for g in t.gluings():
        images = perm_mod.to_ridge_images(g.perm, g.ridge)
        block = "".join(_label(v) for v in images)
        lines.append(f"{g.facet} {g.ridge} -> {g.other_facet} ({block})")
    return "\n".join(lines) + "\n"


def parse(text: str) -> Triangulation:
    """Parse the gluing-table format, with line-numbered diagnostics."""
    dim: Optional[int] = None
    facets: Optional[int] = None
    gluings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if dim is None:
            if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit():
                raise ParseError("expected header 'dim <d>'", lineno)
            dim = int(parts[1])
            if dim < 1:
                raise ParseError("dimension must be at least 1", lineno)
            continue
        if facets is None:
            if len(parts) != 2 or parts[0] != "facets" or not parts[1].isdigit():
                raise ParseError("expected header 'facets <n>'", lineno)
            facets = int(parts[1])
            if facets < 1:
                raise ParseError("facet count must be at least 1", lineno)
            continue
        if len(parts) != 5 or parts[2] != "->":
            raise ParseError("expected '<facet> <ridge> -> <facet> (<images>)'",
                             lineno)
        try:
            facet, ridge, other = int(parts[0]), int(parts[1]), int(parts[3])
        except ValueError:
            raise ParseError("facet and ridge fields must be integers",
                             lineno) from None
        block = parts[4]
        if len(block) < 2 or block[0] != "(" or block[-1] != ")":
            raise ParseError("image block must be parenthesised", lineno)
        body = block[1:-1]
        if len(body) != dim:
            raise ParseError(
                f"expected {dim} image labels, got {len(body)}", lineno)
        images = []
        for ch in body:
            v = _LABELS.find(ch)
            if v < 0 or v > dim:
                raise ParseError(f"label {ch!r} out of range", lineno)
            images.append(v)
        gluings.append((lineno, facet, ridge, other, images))
    if dim is None or facets is None:
        raise ParseError("missing header", 1)

    t = Triangulation(dim, facets)
    for lineno, facet, ridge, other, images in gluings:
        try:
            t = t.join(facet, ridge, other, images)
        except (GluingError, ValueError) as exc:
            raise ParseError(str(exc), lineno) from None
    return t


def export_dot(g: Multigraph,
               separating: Iterable[int] = (),
               component_of: Optional[Dict[int, int]] = None,
               sequence: Optional[Sequence[int]] = None) -> str:
    """Render a multigraph in DOT, loops as self-edges.

    ``separating`` nodes are highlighted; ``component_of`` (arc index to
    component id) labels arcs; ``sequence`` annotates nodes with their
    position in a node order.
    """
    sep = set(separating)
    pos = {v: k for k, v in enumerate(sequence)} if sequence else {}
    lines = ["graph dual {", "  node [shape=circle];"]
    for v in range(g.node_count):
        attrs = []
        if v in sep:
            attrs.append('color="red"')
            attrs.append("penwidth=2")
        if v in pos:
            attrs.append(f'xlabel="{pos[v] + 1}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for idx, (u, v) in enumerate(g.arcs):
        attrs = []
        if component_of is not None and idx in component_of:
            attrs.append(f'label="{component_of[idx]}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
