"""Pseudomanifolds that beat the even-dimensional vertex bound.

Closed 4-manifolds are conjectured to satisfy f_0 <= f_4/2 + 4.  The
double-loop series built from two-fold pentachora exceed the bound while
keeping every triangle link a single cycle: the singularity hides in a
single edge link of growing genus (and one vertex link above it).
"""

from triglue import classify, dehn_sommerville_check, delta, link, p2, p3, p3_nl

for k in range(1, 5):
    t = p3(k)
    d = delta(t)
    print(f"p3({k}): {t.size:2d} pentachora, {t.vertex_count():2d} vertices, "
          f"delta {d} ({'exceeds' if d > 4 else 'within'} the bound)")
print()

t = p3(4)
rep = classify(t)
print("p3(4) is a pseudomanifold:", rep.pseudomanifold)
for v in rep.nonsingularity:
    print(f"  links of {v.s}-faces all spheres: {str(v.holds):5s}"
          f"  [{v.certainty}]")

singular = [s for s in rep.link_summaries[1] if not s.sphere]
for s in singular:
    print(f"singular edge link: orientable genus {s.genus} surface "
          f"(euler characteristic {s.chi})")
singular_v = [s for s in rep.link_summaries[0] if not s.sphere]
print("vertex links failing the homology-sphere test:", len(singular_v))
print()

# The middle face-count residual detects the singular link: it equals
# twice the genus, and vanishes exactly when all edge links are spheres.
for name, t in (("p3(4)", p3(4)), ("p2(3)", p2(3)), ("p3_nl(2)", p3_nl(2))):
    print(f"{name}: residuals {dehn_sommerville_check(t)}")
print()

# The loopless variant tells the same story with a loop-free dual graph.
t = p3_nl(4)
print(f"p3_nl(4): {t.size} pentachora, {t.vertex_count()} vertices, "
      f"delta {delta(t)}")
print("first edge link f-vector:",
      link(t, t.face_lattice().faces(1)[0]).triangulation.f_vector())
