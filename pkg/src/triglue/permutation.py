"""Vertex-label permutations.

A permutation on the labels ``0, ..., d`` is stored as a tuple ``p`` of
length ``d + 1`` with ``p[i]`` the image of label ``i``.  These describe
affine identifications between simplices: a ridge gluing is determined by
where it sends each vertex label.
"""

from __future__ import annotations

from itertools import permutations as _all_permutations
from typing import Sequence, Tuple

Perm = Tuple[int, ...]


def identity(degree: int) -> Perm:
    """The identity permutation on ``0, ..., degree - 1`` labels."""
    return tuple(range(degree))


def is_permutation(p: Sequence[int], degree: int) -> bool:
    return len(p) == degree and sorted(p) == list(range(degree))


def check_permutation(p: Sequence[int], degree: int) -> Perm:
    """Validate and normalise ``p`` to a tuple, raising ``ValueError`` if bad."""
    t = tuple(p)
    if not is_permutation(t, degree):
        raise ValueError(f"{p!r} is not a permutation of 0..{degree - 1}")
    return t


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation applying ``q`` first, then ``p``."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def sign(p: Perm) -> int:
    """Parity of ``p``: +1 for even permutations, -1 for odd ones."""
    seen = [False] * len(p)
    s = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def transposition(degree: int, a: int, b: int) -> Perm:
    p = list(range(degree))
    p[a], p[b] = p[b], p[a]
    return tuple(p)


def all_permutations(degree: int):
    """All permutations of ``0, ..., degree - 1`` in lexicographic order."""
    return _all_permutations(range(degree))


def from_ridge_images(dim: int, ridge: int, images: Sequence[int]) -> Perm:
    """Complete ridge-corner images to a full label permutation.

    ``images`` lists, in increasing corner order of the ridge opposite
    vertex ``ridge``, the image of each corner.  The opposite vertex is
    sent to the unique label left over.  This is the gluing-table
    convention: the entry ``p (abcd)`` pairs the ordered ridge vertices
    with labels ``a, b, c, d`` of the partner simplex.
    """
    if not 0 <= ridge <= dim:
        raise ValueError(f"ridge index {ridge} out of range for dimension {dim}")
    imgs = tuple(images)
    if len(imgs) != dim:
        raise ValueError(f"expected {dim} ridge images, got {len(imgs)}")
    if len(set(imgs)) != dim or not all(0 <= v <= dim for v in imgs):
        raise ValueError(f"ridge images {imgs!r} are not distinct labels in 0..{dim}")
    missing = set(range(dim + 1)).difference(imgs)
    corners = [v for v in range(dim + 1) if v != ridge]
    p = [0] * (dim + 1)
    for corner, img in zip(corners, imgs):
        p[corner] = img
    p[ridge] = missing.pop()
    return tuple(p)


def to_ridge_images(perm: Perm, ridge: int) -> Perm:
    """Extract the ridge-corner images of ``perm``, inverse of ``from_ridge_images``."""
    return tuple(perm[v] for v in range(len(perm)) if v != ridge)
