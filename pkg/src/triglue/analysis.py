"""Face-count identities, homology, bounds, and classification.

Everything here works in exact arithmetic: integer chain complexes with
Smith normal form for homology, :class:`fractions.Fraction` for the
vertex-count bounds.

The vertex-count deviation of a closed triangulation is
``delta = f_0 - f_d / 2``; closed even-dimensional manifolds are
conjectured to satisfy ``delta <= d``, and odd-dimensional ones proven to
satisfy ``f_0 <= f_d + (d-1)/2`` for ``f_d >= d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _permutations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import smith
from .links import link
from .permutation import sign as perm_sign
from .triangulation import FaceClass, Triangulation, map_sign


class ValidityError(ValueError):
    """The operation needs a valid triangulation (no self-identified faces)."""


def _require_valid(t: Triangulation) -> None:
    if not t.is_valid():
        raise ValidityError("triangulation has self-identified faces")


# -- homology ------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers and torsion coefficients per dimension."""

    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]

    @property
    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))


def boundary_matrix(t: Triangulation, dim: int) -> List[List[int]]:
    """The integer boundary map from ``dim``-chains to ``(dim-1)``-chains.

    Faces are oriented by the ascending corner order of their
    representative embeddings; each sub-face contributes the usual
    alternating sign times the parity of its corner bijection onto its
    class representative.
    """
    lat = t.face_lattice()
    rows = len(lat.faces(dim - 1))
    mat = [[0] * len(lat.faces(dim)) for _ in range(rows)]
    for cls in lat.faces(dim):
        facet, corners = cls.representative
        for j in range(dim + 1):
            sub = corners[:j] + corners[j + 1:]
            target = lat.class_of(facet, sub)
            s = map_sign(target.rep_maps[(facet, sub)])
            mat[target.index][cls.index] += (-1) ** j * s
    return mat


def homology(t: Triangulation) -> HomologyProfile:
    """Integer homology of the identification space of a valid triangulation."""
    _require_valid(t)
    d = t.dim
    f = t.f_vector()
    factors = [smith.invariant_factors(boundary_matrix(t, i))
               for i in range(1, d + 1)]
    betti = []
    torsion = []
    for i in range(d + 1):
        rank_in = len(factors[i]) if i < d else 0        # rank of boundary from C_{i+1}
        rank_out = len(factors[i - 1]) if i >= 1 else 0  # rank of boundary from C_i
        betti.append(f[i] - rank_out - rank_in)
        tors = factors[i] if i < d else ()
        torsion.append(tuple(v for v in tors if v > 1))
    return HomologyProfile(tuple(betti), tuple(torsion))


def orientability(t: Triangulation) -> bool:
    """Whether facet orientations can be chosen coherently.

    An assignment of signs to facets must satisfy
    ``sign(B) * sign(A) = -parity(correspondence)`` across every gluing;
    decided by propagation over the dual graph, per component.
    """
    _require_valid(t)
    signs: Dict[int, int] = {}
    for start in range(t.size):
        if start in signs:
            continue
        signs[start] = 1
        stack = [start]
        while stack:
            f = stack.pop()
            for r in range(t.dim + 1):
                got = t.gluing(f, r)
                if got is None:
                    continue
                other, _, p = got
                need = -perm_sign(p) * signs[f]
                if other not in signs:
                    signs[other] = need
                    stack.append(other)
                elif signs[other] != need:
                    return False
    return True


def surface_type(t: Triangulation) -> Tuple[bool, int]:
    """Classify a closed connected valid 2-dimensional triangulation.

    Returns ``(orientable, genus)`` where the Euler characteristic is
    ``2 - 2 * genus`` in the orientable case and ``2 - genus`` (cross-cap
    count) otherwise.
    """
    if t.dim != 2:
        raise ValueError("surface classification needs dimension 2")
    if not t.is_closed() or not t.is_connected():
        raise ValueError("surface classification needs a closed connected input")
    _require_valid(t)
    chi = t.euler_characteristic()
    if orientability(t):
        return True, (2 - chi) // 2
    return False, 2 - chi


# -- face-count identities and bounds ------------------------------------------


def dehn_sommerville_check(t: Triangulation) -> Tuple[int, int, int]:
    """Residuals of the three face-count identities of closed 4-dimensional
    triangulations whose edge links are spheres.

    Returns ``(f_0 - f_1 + f_2 - f_3 + f_4 - chi,
    2 f_1 - 3 f_2 + 4 f_3 - 5 f_4, 2 f_3 - 5 f_4)`` with ``chi`` computed
    from homology.  Each residual vanishes on a 1-nonsingular input; a
    single non-spherical edge link of genus ``g`` shifts the middle
    residual to ``2 g``.
    """
    if t.dim != 4:
        raise ValueError("identities apply to dimension 4")
    if not t.is_closed():
        raise ValueError("identities apply to closed triangulations")
    f = t.f_vector()
    chi = homology(t).euler
    r1 = f[0] - f[1] + f[2] - f[3] + f[4] - chi
    r2 = 2 * f[1] - 3 * f[2] + 4 * f[3] - 5 * f[4]
    r3 = 2 * f[3] - 5 * f[4]
    return (r1, r2, r3)


def delta(t: Triangulation) -> Fraction:
    """Vertex-count deviation ``f_0 - f_d / 2`` of a closed triangulation."""
    if not t.is_closed():
        raise ValueError("delta is defined for closed triangulations")
    return Fraction(t.vertex_count()) - Fraction(t.size, 2)


@dataclass(frozen=True)
class VertexBoundReport:
    """Verdict of the dimension-dependent vertex-count bound."""

    dim: int
    f0: int
    fd: int
    bound: Fraction
    case: str            # "even", "odd-small-even", or "odd"
    proven: bool         # bound known to hold for all closed connected inputs
    status: str          # "satisfied", "violated", or "open"


def conjecture_check(t: Triangulation) -> VertexBoundReport:
    """Evaluate the applicable branch of the vertex-count bound.

    ``f_0 <= f_d/2 + d`` for even ``d`` (and for odd ``d`` with ``f_d``
    even and below ``d``), ``f_0 <= f_d + (d-1)/2`` otherwise.  ``status``
    is ``"open"`` only in the odd-dimension, odd-``f_d``-below-``d`` case
    when the value exceeds the sharp construction but stays within the
    proven ceiling ``floor(f_d/2) + d``.
    """
    if not t.is_closed():
        raise ValueError("the bound applies to closed triangulations")
    if not t.is_connected():
        raise ValueError("the bound applies to connected triangulations")
    d = t.dim
    f0, fd = t.vertex_count(), t.size
    if d % 2 == 0:
        case = "even"
        bound = Fraction(fd, 2) + d
        proven = d == 2
    elif fd < d and fd % 2 == 0:
        case = "odd-small-even"
        bound = Fraction(fd, 2) + d
        proven = True
    else:
        case = "odd"
        bound = Fraction(fd) + Fraction(d - 1, 2)
        proven = fd >= d or fd == 1
    if f0 <= bound:
        status = "satisfied"
    elif case == "odd" and not proven and f0 <= fd // 2 + d:
        status = "open"
    else:
        status = "violated"
    return VertexBoundReport(d, f0, fd, bound, case, proven, status)


@dataclass(frozen=True)
class BoundHypothesis:
    """A hypothesised linear vertex bound ``f_0 <= a f_4 + b``."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if not 0 < self.a <= 1:
            raise ValueError("coefficient a must lie in (0, 1]")


@dataclass(frozen=True)
class BettiBoundReport:
    beta1: int
    beta2: int
    beta1_contradiction: bool     # nonzero H_1 despite asserted simple connectivity
    identity_residual: Fraction   # 3 f_0 - f_1 + f_4/2 - 6 - 3 beta_2
    prebound_holds: bool          # f_4 + 4 f_0 >= 12 + 6 beta_2
    facet_bound_holds: bool       # f_4 >= (6 beta_2 - 4) / 5
    f0_le_f1: bool
    actual_bound_holds: bool      # f_4 >= 2 beta_2
    hypothesis_bound: Optional[Fraction]
    hypothesis_holds: Optional[bool]


def betti_bound_report(t: Triangulation, simply_connected: bool,
                       hypothesis: Optional[BoundHypothesis] = None) -> BettiBoundReport:
    """Second-Betti-number facet bounds for a closed 4-dimensional
    triangulation asserted (by the caller) to be simply connected."""
    if t.dim != 4:
        raise ValueError("Betti bounds apply to dimension 4")
    if not t.is_closed() or not t.is_connected():
        raise ValueError("Betti bounds apply to closed connected triangulations")
    if not simply_connected:
        raise ValueError("simple connectivity must be asserted by the caller; "
                         "it is not decidable here")
    h = homology(t)
    beta1, beta2 = h.betti[1], h.betti[2]
    contradiction = beta1 != 0 or bool(h.torsion[1])
    f = t.f_vector()
    identity = (3 * Fraction(f[0]) - f[1] + Fraction(f[4], 2)
                - 6 - 3 * beta2)
    prebound = f[4] + 4 * f[0] >= 12 + 6 * beta2
    facet_bound = Fraction(f[4]) >= Fraction(6 * beta2 - 4, 5)
    hb = None
    holds = None
    if hypothesis is not None:
        hb = (6 * beta2 + 12 - 4 * hypothesis.b) / (4 * hypothesis.a + 1)
        holds = Fraction(f[4]) >= hb
    return BettiBoundReport(
        beta1=beta1, beta2=beta2, beta1_contradiction=contradiction,
        identity_residual=identity, prebound_holds=prebound,
        facet_bound_holds=facet_bound, f0_le_f1=f[0] <= f[1],
        actual_bound_holds=f[4] >= 2 * beta2,
        hypothesis_bound=hb, hypothesis_holds=holds)


# -- pseudomanifold classification ---------------------------------------------


@dataclass(frozen=True)
class LinkSummary:
    face_dim: int
    index: int
    facets: int
    closed: bool
    connected: bool
    valid: bool
    chi: int
    orientable: Optional[bool]    # set for surface links
    genus: Optional[int]          # set for surface links
    sphere: bool


@dataclass(frozen=True)
class NonsingularityVerdict:
    s: int
    holds: bool
    certainty: str                # "exact" or "homology-certified"
    failing: Tuple[int, ...]      # indices of s-faces with non-sphere links


@dataclass(frozen=True)
class ClassificationReport:
    dim: int
    pseudomanifold: bool
    nonsingularity: Tuple[NonsingularityVerdict, ...]   # s = 0 .. d-1
    link_summaries: Tuple[Tuple[LinkSummary, ...], ...]  # by face dimension
    delta: Fraction
    vertex_bound: VertexBoundReport

    def verdict(self, s: int) -> NonsingularityVerdict:
        return self.nonsingularity[s]


def _link_summary(lt: Triangulation, face_dim: int, index: int) -> LinkSummary:
    closed = lt.is_closed()
    connected = lt.is_connected()
    valid = lt.is_valid()
    chi = lt.euler_characteristic()
    orientable = None
    genus = None
    if lt.dim == 0:
        sphere = lt.size == 2
    elif not (closed and connected and valid):
        sphere = False
    elif lt.dim == 1:
        sphere = True                 # a closed connected curve is a circle
    elif lt.dim == 2:
        orientable, genus = surface_type(lt)
        sphere = chi == 2
    else:
        h = homology(lt)
        expected = tuple(1 if i in (0, lt.dim) else 0 for i in range(lt.dim + 1))
        sphere = h.betti == expected and all(not tor for tor in h.torsion)
    return LinkSummary(face_dim=face_dim, index=index, facets=lt.size,
                       closed=closed, connected=connected, valid=valid,
                       chi=chi, orientable=orientable, genus=genus,
                       sphere=sphere)


def classify(t: Triangulation) -> ClassificationReport:
    """Pseudomanifold test and nonsingularity levels of a closed connected
    triangulation.

    A level ``s`` holds when every ``s``-face link is a standard sphere.
    Links of dimension up to two are decided exactly; higher-dimensional
    links are certified by homology only, and the verdict says so.
    """
    if not t.is_closed() or not t.is_connected():
        raise ValueError("classification needs a closed connected triangulation")
    d = t.dim
    lat = t.face_lattice()
    pseudo = lat.all_valid()
    dlt = delta(t)
    bound = conjecture_check(t)

    verdicts: List[NonsingularityVerdict] = []
    summaries: List[Tuple[LinkSummary, ...]] = []
    for s in range(d):
        link_dim = d - 1 - s
        certainty = "exact" if link_dim <= 2 else "homology-certified"
        failing: List[int] = []
        per_dim: List[LinkSummary] = []
        if pseudo:
            for cls in lat.faces(s):
                lt = link(t, cls).triangulation
                summary = _link_summary(lt, s, cls.index)
                per_dim.append(summary)
                if not summary.sphere:
                    failing.append(cls.index)
            holds = not failing
        else:
            holds = False
        verdicts.append(NonsingularityVerdict(
            s=s, holds=holds, certainty=certainty, failing=tuple(failing)))
        summaries.append(tuple(per_dim))
    return ClassificationReport(
        dim=d, pseudomanifold=pseudo, nonsingularity=tuple(verdicts),
        link_summaries=tuple(summaries), delta=dlt, vertex_bound=bound)


# -- exhaustive census ----------------------------------------------------------


_CENSUS_GUARD = {2: 6, 3: 2}


@dataclass(frozen=True)
class CensusSummary:
    dim: int
    facets: int
    total: int
    connected: int


def closed_triangulations(dim: int, facets: int,
                          force: bool = False) -> Iterator[Triangulation]:
    """All closed triangulations with the given dimension and facet count.

    Every perfect matching of the ridge slots is combined with every
    corner correspondence; no isomorphism reduction is attempted, so the
    same triangulation appears many times.  An odd number of slots yields
    nothing.  Guarded to desk-scale sizes unless ``force`` is set.
    """
    if dim < 1 or facets < 1:
        raise ValueError("need dimension and facet count at least 1")
    if not force and facets > _CENSUS_GUARD.get(dim, 1):
        raise ValueError(
            f"census of dimension {dim} is guarded to "
            f"{_CENSUS_GUARD.get(dim, 1)} facets; pass force=True to override")
    slots = [(f, r) for f in range(facets) for r in range(dim + 1)]
    if len(slots) % 2:
        return

    pair_perms: Dict[Tuple[int, int], List[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = {}
    for r1 in range(dim + 1):
        corners1 = [v for v in range(dim + 1) if v != r1]
        for r2 in range(dim + 1):
            corners2 = [v for v in range(dim + 1) if v != r2]
            options = []
            for images in _permutations(corners2):
                p = [0] * (dim + 1)
                for c, img in zip(corners1, images):
                    p[c] = img
                p[r1] = r2
                pt = tuple(p)
                inv = [0] * (dim + 1)
                for i, v in enumerate(pt):
                    inv[v] = i
                options.append((pt, tuple(inv)))
            pair_perms[(r1, r2)] = options

    table: Dict[Tuple[int, int], Tuple[int, int, Tuple[int, ...]]] = {}

    def rec(free: List[Tuple[int, int]]) -> Iterator[Triangulation]:
        if not free:
            yield Triangulation._from_table(dim, facets, dict(table))
            return
        s0 = free[0]
        for k in range(1, len(free)):
            s1 = free[k]
            rest = free[1:k] + free[k + 1:]
            for p, inv in pair_perms[(s0[1], s1[1])]:
                table[s0] = (s1[0], s1[1], p)
                table[s1] = (s0[0], s0[1], inv)
                yield from rec(rest)
            del table[s0]
            del table[s1]
        return

    yield from rec(slots)


def enumerate_closed(dim: int, facets: int,
                     visitor: Optional[Callable[[Triangulation], None]] = None,
                     force: bool = False) -> CensusSummary:
    """Stream every closed triangulation of the given size to ``visitor``."""
    total = 0
    connected = 0
    for t in closed_triangulations(dim, facets, force=force):
        total += 1
        if t.is_connected():
            connected += 1
        if visitor is not None:
            visitor(t)
    return CensusSummary(dim=dim, facets=facets, total=total, connected=connected)
