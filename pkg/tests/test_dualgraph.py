"""Dual graphs, block decompositions, branching number, crit machinery."""

import random

import pytest

from triglue.dualgraph import (
    Multigraph,
    block_decompositions,
    branching_number,
    construct_low_crit_sequence,
    crit_bruteforce,
    crit_of_sequence,
    cut_profile,
    dual_graph,
    theorem_bound_check,
    two_connected_sequence,
)
from triglue.triangulation import Triangulation, new_triangulation


def identity_pillow(dim):
    t = new_triangulation(dim, 2)
    for ridge in range(dim + 1):
        t = t.join_perm(0, ridge, 1, tuple(range(dim + 1)))
    return t


def ring_with_loops(length, loops_per_node):
    arcs = [(i, (i + 1) % length) for i in range(length)]
    arcs += [(i, i) for i in range(length) for _ in range(loops_per_node)]
    return Multigraph(length, arcs)


def random_connected_multigraph(rng, max_nodes=8):
    n = rng.randint(2, max_nodes)
    arcs = [(i, rng.randrange(i)) for i in range(1, n)]       # spanning tree
    for _ in range(rng.randint(0, 2 * n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            arcs.append((u, v))
    return Multigraph(n, arcs)


def test_degree_counts_loops_twice():
    g = Multigraph(2, [(0, 0), (0, 1)])
    assert g.degree(0) == 3
    assert g.degree(1) == 1
    assert g.loops_at(0) == 1


def test_pillow_dual_graph():
    g = dual_graph(identity_pillow(4))
    assert g.node_count == 2
    assert g.arcs == ((0, 1),) * 5
    assert g.regular_degree() == 5
    cut, sep = block_decompositions(g)
    assert len(sep.components) == 1 and not sep.nodes
    assert branching_number(g) == 2


def test_double_loop_facet_dual_graph():
    t = new_triangulation(4, 1).join(0, 3, 0, (0, 3, 2, 4)).join(0, 2, 0, (2, 1, 3, 4))
    g = dual_graph(t)
    assert g.node_count == 1
    assert g.loop_count == 2
    assert len(t.free_slots()) == 1
    assert branching_number(g) == 1


def test_path_of_three_block_cut_tree():
    g = Multigraph(3, [(0, 1), (1, 2)])
    cut, sep = block_decompositions(g)
    assert cut.nodes == (1,)
    assert len(cut.components) == 2
    assert sorted(len(c.nodes) for c in cut.components) == [2, 2]
    assert len(cut.tree) == 3
    assert len(cut.leaves()) == 2
    assert branching_number(g) == 2


def test_ring_with_loops_decomposition():
    g = ring_with_loops(5, 2)
    cut, sep = block_decompositions(g)
    assert len(sep.components) == 11          # the 5-cycle plus ten loops
    assert sep.nodes == (0, 1, 2, 3, 4)
    assert len([c for c in sep.components if c.is_loop]) == 10
    assert len(sep.leaves()) == 10
    assert branching_number(g) == 10


def test_trees_are_trees():
    g = Multigraph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (4, 5), (4, 4)])
    for dec in block_decompositions(g):
        nodes = len(dec.tree)
        arcs = sum(len(v) for v in dec.tree.values()) // 2
        assert arcs == nodes - 1              # connected by construction


def test_crit_of_sequence_paths():
    g = Multigraph(3, [(0, 1), (1, 2)])
    assert crit_of_sequence(g, (0, 1, 2)) == 2
    assert crit_of_sequence(g, (1, 0, 2)) == 3
    with pytest.raises(ValueError):
        crit_of_sequence(g, (0, 0, 1))


def test_crit_of_isolated_sequence_node_counts_once():
    g = Multigraph(3, [(0, 1), (1, 2)])
    assert crit_of_sequence(g, (0,)) == 1
    assert crit_of_sequence(g, (0, 2)) == 2   # neither neighbour listed


def test_loops_do_not_affect_crit():
    g = Multigraph(2, [(0, 1), (0, 0)])
    assert crit_of_sequence(g, (0, 1)) == 2


def test_crit_bruteforce_small_graphs():
    assert crit_bruteforce(Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])) == 2
    star = Multigraph(4, [(0, 1), (0, 2), (0, 3)])
    assert crit_bruteforce(star) == 3
    single = Multigraph(1, [])
    assert crit_bruteforce(single) == 1
    with pytest.raises(ValueError):
        crit_bruteforce(Multigraph(12, [(i, i + 1) for i in range(11)]))


def _crit_by_permutations(g):
    from itertools import permutations
    return min(crit_of_sequence(g, s)
               for s in permutations(range(g.node_count)))


def test_crit_dp_matches_naive_enumeration():
    rng = random.Random(7)
    for _ in range(30):
        g = random_connected_multigraph(rng, max_nodes=6)
        assert crit_bruteforce(g) == _crit_by_permutations(g)


def test_branch_equals_crit_on_random_loopless_graphs():
    rng = random.Random(11)
    for _ in range(60):
        g = random_connected_multigraph(rng)
        assert branching_number(g) == crit_bruteforce(g)


def test_two_connected_sequence_any_endpoints():
    g = Multigraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)])
    for first in range(5):
        for last in range(5):
            if first == last:
                continue
            seq = two_connected_sequence(g, first, last)
            assert seq[0] == first and seq[-1] == last
            assert sorted(seq) == list(range(5))
            assert crit_of_sequence(g, seq) == 2


def test_constructed_sequence_achieves_branching_number():
    rng = random.Random(23)
    for _ in range(60):
        g = random_connected_multigraph(rng)
        seq = construct_low_crit_sequence(g)
        assert sorted(seq) == list(range(g.node_count))
        assert crit_of_sequence(g, seq) == branching_number(g)
        pos = {v: k for k, v in enumerate(seq)}
        sources = [v for v in seq
                   if all(pos[w] > pos[v] for w in g.neighbours(v))]
        assert len(sources) == 1


def test_construct_low_crit_rejects_loops():
    with pytest.raises(ValueError):
        construct_low_crit_sequence(Multigraph(2, [(0, 1), (0, 0)]))


def test_block_chain_sequence():
    # Three 2-connected components joined in a path: crit stays 2.
    arcs = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2),
            (4, 5), (5, 6), (6, 4)]
    g = Multigraph(7, arcs)
    seq = construct_low_crit_sequence(g)
    assert crit_of_sequence(g, seq) == 2 == branching_number(g)


def test_cut_profile_telescopes_and_closes():
    t = identity_pillow(4)
    g = dual_graph(t)
    seq = construct_low_crit_sequence(g)
    prof = cut_profile(g, seq)
    d = 4
    for k in range(1, len(seq)):
        assert prof.cut[k] - prof.cut[k - 1] == d + 1 - 2 * prof.backward[k]
    assert prof.final_cut == 0
    assert prof.case_tags[0] == "start"


def test_theorem_bound_on_pillow():
    rep = theorem_bound_check(identity_pillow(4))
    assert rep.delta == 4
    assert rep.branch == 2
    assert rep.bound == 4
    assert rep.holds
    assert rep.case_counts[2] == rep.branch - 1
    assert rep.profile.final_cut == 0


def test_theorem_bound_rejects_bad_input():
    with pytest.raises(ValueError):
        theorem_bound_check(identity_pillow(3))          # odd dimension
    with pytest.raises(ValueError):
        theorem_bound_check(new_triangulation(4, 2))     # open


def test_dual_graph_loop_from_self_gluing():
    t = new_triangulation(2, 1).join(0, 1, 0, (1, 2))
    g = dual_graph(t)
    assert g.arcs == ((0, 0),)
