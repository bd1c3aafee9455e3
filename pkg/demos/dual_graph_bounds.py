"""Dual graphs, block structure, and the branching-number vertex bound.

The dual graph has a node per facet and an arc per gluing.  Its block
decomposition controls how many vertices a closed even-dimensional
triangulation can have: delta = f_0 - f_d/2 is bounded by
d + floor((branch - 2)/(d - 1)), where branch counts the leaves of the
block-separating tree.
"""

from triglue import (
    block_decompositions,
    branching_number,
    construct_low_crit_sequence,
    crit_of_sequence,
    cut_profile,
    dual_graph,
    export_dot,
    p3,
    pillow,
    remove_loops,
    sphere_odd,
    theorem_bound_check,
)

# The 5-facet 5-sphere: dual graph is a pentagon with two loops per node.
g = dual_graph(sphere_odd(5, 5))
print("5-sphere dual graph: nodes", g.node_count, "arcs", len(g.arcs),
      "loops", g.loop_count)
cut, sep = block_decompositions(g)
print("non-separable components:", len(sep.components),
      " separating nodes:", list(sep.nodes))
print("branching number:", branching_number(g))
print()

# Expanding each loop by a 0-2 vertex move gives a loopless graph whose
# block-cut tree matches; an optimal node ordering has branch-many
# critical points, realised constructively.
t = p3(2)
loopless = remove_loops(t)
g2 = dual_graph(loopless)
seq = construct_low_crit_sequence(g2)
print("p3(2) after loop removal:", g2.node_count, "nodes,",
      g2.loop_count, "loops")
print("constructed sequence has", crit_of_sequence(g2, seq),
      "critical points = branching number", branching_number(g2))
profile = cut_profile(g2, seq)
print("cut profile closes at", profile.final_cut)
print()

# The full bound report: the pillow attains delta = 4 with equality.
rep = theorem_bound_check(pillow(4))
print(f"pillow: delta {rep.delta} <= bound {rep.bound} "
      f"(branching number {rep.branch})")
rep = theorem_bound_check(p3(4))
print(f"p3(4):  delta {rep.delta} <= bound {rep.bound} "
      f"(branching number {rep.branch})")
print()

# DOT output for rendering with graphviz.
print(export_dot(dual_graph(pillow(4))))
