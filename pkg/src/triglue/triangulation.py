"""Generalised triangulations: simplices glued along ridges.

A triangulation of dimension ``d`` is a set of abstract ``d``-simplices
together with gluings identifying pairs of ridges ((d-1)-faces) affinely,
each gluing given by a vertex-label permutation.  A ridge may be glued to
a ridge of the same simplex, but never to itself, and each ridge is used
in at most one gluing.

The identified faces of all dimensions, their degrees and their validity
flags are collected in a :class:`FaceLattice`, computed by a union-find
closure that tracks the corner bijections induced by the gluings.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import permutation as perm_mod
from .permutation import Perm

Slot = Tuple[int, int]          # (facet index, ridge index)
Embedding = Tuple[int, Tuple[int, ...]]   # (facet index, ascending corner tuple)


class GluingError(ValueError):
    """A gluing request violates the triangulation rules."""


class InvalidFaceError(ValueError):
    """An operation was asked to work at a face flagged as invalid."""


class Gluing(NamedTuple):
    """One ridge identification, stored from its lexicographically smaller side."""

    facet: int
    ridge: int
    other_facet: int
    other_ridge: int
    perm: Perm

    @property
    def is_loop(self) -> bool:
        return self.facet == self.other_facet


class FaceClass(NamedTuple):
    """One identified face: an equivalence class of sub-simplex embeddings.

    ``rep_maps[e]`` sends the ascending corners of embedding ``e`` to the
    corresponding corners of the representative embedding.
    """

    dim: int
    index: int
    representative: Embedding
    embeddings: Tuple[Embedding, ...]
    rep_maps: Dict[Embedding, Tuple[int, ...]]
    valid: bool

    @property
    def degree(self) -> int:
        return len(self.embeddings)


def _compose_maps(m_xy: Tuple[int, ...], m_yz: Tuple[int, ...]) -> Tuple[int, ...]:
    # m_xy: corners of x (ascending) -> labels in y; m_yz aligned to y's
    # ascending corners, which are exactly sorted(m_xy).
    pos = {v: i for i, v in enumerate(sorted(m_xy))}
    return tuple(m_yz[pos[v]] for v in m_xy)


def _invert_map(corners_x: Tuple[int, ...], m_xy: Tuple[int, ...]) -> Tuple[int, ...]:
    # Inverse of m_xy, aligned to y's ascending corners sorted(m_xy).
    pos = {v: k for k, v in enumerate(m_xy)}
    return tuple(corners_x[pos[v]] for v in sorted(m_xy))


def map_sign(m: Tuple[int, ...]) -> int:
    """Parity of a corner bijection given as images of ascending corners."""
    order = sorted(range(len(m)), key=lambda k: m[k])
    return perm_mod.sign(tuple(order))


class FaceLattice:
    """All identified faces of a triangulation, by dimension.

    Classes within each dimension are ordered by their representative
    embedding (lexicographically least ``(facet, corners)``), so equal
    triangulations produce identical lattices.
    """

    def __init__(self, dim: int, classes: List[List[FaceClass]]):
        self.dim = dim
        self.classes = classes
        self._lookup: Dict[Embedding, FaceClass] = {}
        for per_dim in classes:
            for cls in per_dim:
                for emb in cls.embeddings:
                    self._lookup[emb] = cls

    def faces(self, dim: int) -> List[FaceClass]:
        return self.classes[dim]

    def class_of(self, facet: int, corners: Sequence[int]) -> FaceClass:
        emb = (facet, tuple(sorted(corners)))
        try:
            return self._lookup[emb]
        except KeyError:
            raise KeyError(f"no face embedding {emb!r}") from None

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(per_dim) for per_dim in self.classes)

    def all_valid(self) -> bool:
        return all(cls.valid for per_dim in self.classes for cls in per_dim)


class Triangulation:
    """An immutable generalised triangulation.

    All modifying operations (:meth:`join`, :meth:`unjoin`, the moves in
    :mod:`triglue.moves`) return new instances; values are safe to share.
    """

    __slots__ = ("dim", "size", "_table", "_lattice")

    def __init__(self, dim: int, size: int,
                 gluings: Iterable[Tuple[int, int, int, Sequence[int]]] = ()):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        if size < 1:
            raise ValueError("a triangulation needs at least one facet")
        self.dim = dim
        self.size = size
        self._table: Dict[Slot, Tuple[int, int, Perm]] = {}
        self._lattice: Optional[FaceLattice] = None
        for facet, ridge, other_facet, perm in gluings:
            self._add_gluing(facet, ridge, other_facet, perm)

    # -- construction helpers -------------------------------------------------

    def _add_gluing(self, facet: int, ridge: int, other_facet: int,
                    perm: Sequence[int]) -> None:
        d = self.dim
        if d == 0:
            raise GluingError("0-dimensional triangulations admit no gluings")
        for f in (facet, other_facet):
            if not 0 <= f < self.size:
                raise GluingError(f"facet index {f} out of range")
        if not 0 <= ridge <= d:
            raise GluingError(f"ridge index {ridge} out of range")
        p = perm_mod.check_permutation(perm, d + 1)
        other_ridge = p[ridge]
        source: Slot = (facet, ridge)
        target: Slot = (other_facet, other_ridge)
        if source == target:
            raise GluingError(f"ridge {source} cannot be glued to itself")
        for slot in (source, target):
            if slot in self._table:
                raise GluingError(f"ridge slot {slot} is already glued")
        self._table[source] = (other_facet, other_ridge, p)
        self._table[target] = (facet, ridge, perm_mod.invert(p))

    @classmethod
    def _from_table(cls, dim: int, size: int,
                    table: Dict[Slot, Tuple[int, int, Perm]]) -> "Triangulation":
        # Trusted fast path: table must already hold both directions.
        t = cls.__new__(cls)
        t.dim = dim
        t.size = size
        t._table = table
        t._lattice = None
        return t

    # -- basic queries ---------------------------------------------------------

    def gluing(self, facet: int, ridge: int) -> Optional[Tuple[int, int, Perm]]:
        """The (other_facet, other_ridge, perm) glued to a slot, or None."""
        return self._table.get((facet, ridge))

    def is_glued(self, facet: int, ridge: int) -> bool:
        return (facet, ridge) in self._table

    def gluings(self) -> List[Gluing]:
        """All gluings, each once, keyed and sorted by the smaller slot."""
        out = []
        for (facet, ridge), (of, orid, p) in self._table.items():
            if (facet, ridge) <= (of, orid):
                out.append(Gluing(facet, ridge, of, orid, p))
        out.sort(key=lambda g: (g.facet, g.ridge))
        return out

    def free_slots(self) -> List[Slot]:
        if self.dim == 0:
            return []
        return [(f, r) for f in range(self.size) for r in range(self.dim + 1)
                if (f, r) not in self._table]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triangulation):
            return NotImplemented
        return (self.dim == other.dim and self.size == other.size
                and self._table == other._table)

    def __hash__(self) -> int:
        return hash((self.dim, self.size, frozenset(self._table.items())))

    def __repr__(self) -> str:
        return (f"Triangulation(dim={self.dim}, facets={self.size}, "
                f"gluings={len(self._table) // 2})")

    # -- joining and unjoining -------------------------------------------------

    def join(self, facet: int, ridge: int, other_facet: int,
             images: Sequence[int]) -> "Triangulation":
        """Glue two ridges, giving the images of the ridge corners in order.

        ``images`` lists the partner labels of the ridge's corners in
        increasing corner order; the vertex opposite the ridge goes to the
        unique remaining label.  Returns a new triangulation.
        """
        p = perm_mod.from_ridge_images(self.dim, ridge, images)
        return self.join_perm(facet, ridge, other_facet, p)

    def join_perm(self, facet: int, ridge: int, other_facet: int,
                  perm: Sequence[int]) -> "Triangulation":
        """Like :meth:`join` but with a full label permutation."""
        new = Triangulation.__new__(Triangulation)
        new.dim = self.dim
        new.size = self.size
        new._table = dict(self._table)
        new._lattice = None
        new._add_gluing(facet, ridge, other_facet, perm)
        return new

    def unjoin(self, facet: int, ridge: int) -> "Triangulation":
        """Remove the gluing at a slot, returning a new triangulation."""
        got = self._table.get((facet, ridge))
        if got is None:
            raise GluingError(f"ridge slot {(facet, ridge)} is not glued")
        other_facet, other_ridge, _ = got
        table = dict(self._table)
        del table[(facet, ridge)]
        del table[(other_facet, other_ridge)]
        return Triangulation._from_table(self.dim, self.size, table)

    # -- face lattice and derived invariants -----------------------------------

    def face_lattice(self) -> FaceLattice:
        if self._lattice is None:
            self._lattice = _compute_face_lattice(self)
        return self._lattice

    def f_vector(self) -> Tuple[int, ...]:
        return self.face_lattice().f_vector

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector()))

    def is_closed(self) -> bool:
        if self.dim == 0:
            return True
        return len(self._table) == self.size * (self.dim + 1)

    def is_connected(self) -> bool:
        parent = list(range(self.size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (f, _), (of, _, _) in self._table.items():
            ra, rb = find(f), find(of)
            if ra != rb:
                parent[rb] = ra
        return len({find(f) for f in range(self.size)}) == 1

    def vertex_count(self) -> int:
        """Number of identified vertices, ``f_vector()[0]``.

        Computed by a plain union-find over facet corners, cheap enough
        for census-scale streaming; agrees with the face lattice.
        """
        if self._lattice is not None:
            return len(self._lattice.faces(0))
        d = self.dim
        parent = list(range(self.size * (d + 1)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (f, r), (of, _, p) in self._table.items():
            base = f * (d + 1)
            obase = of * (d + 1)
            for v in range(d + 1):
                if v != r:
                    a, b = find(base + v), find(obase + p[v])
                    if a != b:
                        parent[b] = a
        return sum(1 for i in range(len(parent)) if find(i) == i)

    def is_valid(self) -> bool:
        """No face of any dimension is self-identified non-trivially."""
        return self.face_lattice().all_valid()

    def boundary_ridges(self) -> List[FaceClass]:
        """Ridge classes of degree one (unglued slots)."""
        if self.dim == 0:
            return []
        return [cls for cls in self.face_lattice().faces(self.dim - 1)
                if cls.degree == 1]


def new_triangulation(dim: int, size: int) -> Triangulation:
    """``size`` disjoint unglued ``dim``-simplices."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    if size < 1:
        raise ValueError("facet count must be at least 1")
    return Triangulation(dim, size)


def compute_face_lattice(t: Triangulation) -> FaceLattice:
    """The identified face lattice of ``t`` (also cached on ``t``)."""
    return t.face_lattice()


def _compute_face_lattice(t: Triangulation) -> FaceLattice:
    d, n = t.dim, t.size

    parent: Dict[Embedding, Embedding] = {}
    to_parent: Dict[Embedding, Tuple[int, ...]] = {}
    rank: Dict[Embedding, int] = {}
    invalid: Dict[Embedding, bool] = {}

    for facet in range(n):
        for k in range(1, d + 2):
            for corners in combinations(range(d + 1), k):
                emb = (facet, corners)
                parent[emb] = emb
                to_parent[emb] = corners
                rank[emb] = 0
                invalid[emb] = False

    def find_map(x: Embedding) -> Tuple[Embedding, Tuple[int, ...]]:
        # Returns the root of x's class and the corner map x -> root,
        # compressing the path so every visited node points to the root.
        chain = []
        y = x
        while parent[y] != y:
            chain.append(y)
            y = parent[y]
        root = y
        for z in reversed(chain):
            p = parent[z]
            if p != root:
                to_parent[z] = _compose_maps(to_parent[z], to_parent[p])
                parent[z] = root
        if x == root:
            return root, root[1]
        return root, to_parent[x]

    def union(e1: Embedding, e2: Embedding, m12: Tuple[int, ...]) -> None:
        r1, m1 = find_map(e1)
        r2, m2 = find_map(e2)
        if r1 == r2:
            # A closed identification path: any mismatch with the existing
            # map means the class is glued to itself non-trivially.
            alt = _compose_maps(m12, m2)
            if alt != m1:
                invalid[r1] = True
            return
        # Map r2 -> r1 through e2 -> e1 -> r1.
        m_r2_e2 = _invert_map(e2[1], m2)
        m_e2_e1 = _invert_map(e1[1], m12)
        m_r2_r1 = _compose_maps(_compose_maps(m_r2_e2, m_e2_e1), m1)
        if rank[r1] < rank[r2]:
            # Attach r1 under r2 instead, with the inverse map.
            m_r1_r2 = _invert_map(r2[1], m_r2_r1)
            parent[r1] = r2
            to_parent[r1] = m_r1_r2
            invalid[r2] = invalid[r2] or invalid[r1]
        else:
            parent[r2] = r1
            to_parent[r2] = m_r2_r1
            invalid[r1] = invalid[r1] or invalid[r2]
            if rank[r1] == rank[r2]:
                rank[r1] += 1

    for g in t.gluings():
        ridge_corners = tuple(v for v in range(d + 1) if v != g.ridge)
        for k in range(1, d + 1):
            for sub in combinations(ridge_corners, k):
                images = tuple(g.perm[v] for v in sub)
                e1 = (g.facet, sub)
                e2 = (g.other_facet, tuple(sorted(images)))
                union(e1, e2, images)

    members: Dict[Embedding, List[Embedding]] = {}
    for facet in range(n):
        for k in range(1, d + 2):
            for corners in combinations(range(d + 1), k):
                emb = (facet, corners)
                root, _ = find_map(emb)
                members.setdefault(root, []).append(emb)

    classes: List[List[FaceClass]] = [[] for _ in range(d + 1)]
    grouped: List[List[Tuple[Embedding, Embedding]]] = [[] for _ in range(d + 1)]
    for root, embs in members.items():
        rep = min(embs)
        grouped[len(rep[1]) - 1].append((rep, root))
    for i in range(d + 1):
        grouped[i].sort()
        for index, (rep, root) in enumerate(grouped[i]):
            embs = sorted(members[root])
            _, m_rep_root = find_map(rep)
            m_root_rep = _invert_map(rep[1], m_rep_root)
            rep_maps = {}
            for emb in embs:
                _, m_emb_root = find_map(emb)
                rep_maps[emb] = _compose_maps(m_emb_root, m_root_rep)
            classes[i].append(FaceClass(
                dim=i, index=index, representative=rep,
                embeddings=tuple(embs), rep_maps=rep_maps,
                valid=not invalid[root]))
    return FaceLattice(d, classes)
