"""Exhaustively enumerate small closed triangulations.

All perfect matchings of the ridge slots combined with all corner
correspondences, streamed without isomorphism reduction.  Valid closed
connected surfaces are classified; everything is checked against the
vertex bounds.
"""

from collections import Counter

from triglue import (
    closed_triangulations,
    conjecture_check,
    delta,
    enumerate_closed,
    surface_type,
)

# Two triangles: every valid connected gluing is a surface with at most
# f_2/2 + 2 = 3 vertices, equality only for the sphere.
surfaces = Counter()
for t in closed_triangulations(2, 2):
    if not t.is_connected():
        continue
    orient, genus = surface_type(t)
    surfaces[(orient, genus)] += 1
    assert (t.vertex_count() == 3) == ((orient, genus) == (True, 0))
print("connected two-triangle surfaces (orientable, genus):")
for key, n in sorted(surfaces.items()):
    print(f"  {key}: {n}")
print()

# One or two tetrahedra: the odd-dimensional bounds, exhaustively.
for n in (1, 2):
    best = 0
    total = 0
    for t in closed_triangulations(3, n):
        total += 1
        if t.is_connected():
            best = max(best, t.vertex_count())
            assert conjecture_check(t).status == "satisfied"
    print(f"3-dimensional census with {n} facet(s): {total} gluings, "
          f"max vertices {best}")
print()

# The census summary interface counts for us.
print(enumerate_closed(2, 4))
print("max delta over connected two-triangle surfaces:",
      max(delta(t) for t in closed_triangulations(2, 2)
          if t.is_connected()))
