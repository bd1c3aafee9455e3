"""Build triangulations by gluing simplices and inspect their face structure.

A generalised triangulation is a set of abstract d-simplices with pairs
of ridges identified by vertex permutations.  This walk-through builds a
few small examples by hand and with the library's generators, and reads
off f-vectors, boundaries and validity.
"""

from triglue import (
    ds1,
    ds2,
    new_triangulation,
    pillow,
    serialize,
    snapped_ball,
    sphere_odd,
)

# Two disjoint 4-simplices: face counts are pure binomials.
t = new_triangulation(4, 2)
print("two disjoint 4-simplices:", t.f_vector())

# Glue them along one tetrahedron, matching vertices 0,1,2,3 in order.
t = t.join(0, 4, 1, (0, 1, 2, 3))
print("sharing one tetrahedron: ", t.f_vector())

# Glue all five ridge pairs by the identity: the pillow 4-sphere.
t = pillow(4)
print("pillow 4-sphere:         ", t.f_vector(),
      "closed" if t.is_closed() else "open")
print()

# A single pentachoron with two ridge pairs folded onto themselves.
# Folding identifies vertex pairs, so vertices disappear.
ball = snapped_ball(4, 2)
print("twice-snapped 4-ball:    ", ball.f_vector())
print("boundary ridge classes:  ", len(ball.boundary_ridges()))

# The same shape with the published gluing tables; ds1 identifies one
# extra vertex pair.
print("ds1:", ds1().f_vector(), " ds2:", ds2().f_vector())
print()

# Odd-dimensional spheres from snapped balls chained in a cycle:
# f facets and f + (d-1)/2 vertices.
s = sphere_odd(5, 6)
print("5-sphere with 6 facets:  f-vector", s.f_vector())
print("vertices = facets + 2:  ", s.f_vector()[0] == 6 + 2)
print()

# Everything serialises to a plain gluing table and parses back.
print(serialize(ds2()))
