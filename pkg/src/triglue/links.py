"""Links of faces.

The link of an ``i``-face is a ``(d - i - 1)``-dimensional triangulation
built from one facet per embedding of the face: the copy of the opposite
face in each containing simplex.  Link facets are glued exactly where the
ridges of the ambient triangulation containing the face are glued, via
the restricted correspondences.

Link facet ``k`` corresponds to ``result.facet_origin[k]``; its vertex
labels follow the ascending order of the opposite face's labels in the
ambient simplex.
"""

from __future__ import annotations

from typing import Dict, NamedTuple, Tuple, Union

from .triangulation import (
    Embedding,
    FaceClass,
    InvalidFaceError,
    Triangulation,
)


class LinkResult(NamedTuple):
    triangulation: Triangulation
    facet_origin: Tuple[Embedding, ...]


FaceRef = Union[FaceClass, Embedding]


def link(t: Triangulation, face: FaceRef) -> LinkResult:
    """The link of a face class, with one facet per embedding.

    ``face`` may be a :class:`FaceClass` of ``t`` or an embedding
    ``(facet, corners)``.  Faces flagged invalid are refused: their links
    are not well defined.
    """
    lattice = t.face_lattice()
    if isinstance(face, FaceClass):
        cls = lattice.class_of(*face.representative)
        if cls is not face and cls.embeddings != face.embeddings:
            raise ValueError("face class does not belong to this triangulation")
        cls = face
    else:
        facet, corners = face
        cls = lattice.class_of(facet, corners)
    if not cls.valid:
        raise InvalidFaceError(
            f"face {cls.representative} is self-identified non-trivially")

    d = t.dim
    i = cls.dim
    link_dim = d - i - 1
    if link_dim < 0:
        raise ValueError("facets have no link")

    embeddings = cls.embeddings
    index_of: Dict[Embedding, int] = {e: k for k, e in enumerate(embeddings)}
    opposite = {}
    for emb in embeddings:
        facet, corners = emb
        opposite[emb] = tuple(v for v in range(d + 1) if v not in corners)

    if link_dim == 0:
        return LinkResult(Triangulation(0, len(embeddings)), embeddings)

    gluings = []
    seen = set()
    for emb in embeddings:
        facet, corners = emb
        tau = opposite[emb]
        for j, u in enumerate(tau):
            got = t.gluing(facet, u)
            if got is None:
                continue            # boundary ridge: link ridge stays free
            if (index_of[emb], j) in seen:
                continue
            other_facet, other_ridge, p = got
            emb2 = (other_facet, tuple(sorted(p[v] for v in corners)))
            tau2 = opposite[emb2]
            j2 = tau2.index(p[u])
            link_perm = tuple(tau2.index(p[w]) for w in tau)
            gluings.append((index_of[emb], j, index_of[emb2], link_perm))
            seen.add((index_of[emb], j))
            seen.add((index_of[emb2], j2))
    return LinkResult(
        Triangulation(link_dim, len(embeddings), gluings), embeddings)
