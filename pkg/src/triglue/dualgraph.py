"""Dual graphs and their block structure.

The dual graph of a triangulation has a node per facet and an arc per
gluing; a self-gluing of a facet gives a loop.  This module implements
the two block decompositions (2-connected components with cut nodes, and
non-separable components with separating nodes), the branching number,
node sequences with their critical points, and the cut profile used to
bound the vertex-count deviation of closed even-dimensional
triangulations by the branching number.

Conventions adopted here:

* a loop counts twice towards the degree of its node;
* loops are ignored when collecting the neighbours of a node, so they
  never affect whether a node is a source or a sink;
* a sequence node none of whose neighbours are listed is both a source
  and a sink but counts once as a critical point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .triangulation import Triangulation

Arc = Tuple[int, int]
TreeNode = Tuple[str, int]      # ("comp", index) or ("node", vertex)


class Multigraph:
    """An undirected multigraph with loops, nodes ``0 .. node_count - 1``."""

    __slots__ = ("node_count", "arcs")

    def __init__(self, node_count: int, arcs: Sequence[Tuple[int, int]] = ()):
        if node_count < 1:
            raise ValueError("a multigraph needs at least one node")
        self.node_count = node_count
        normalised = []
        for u, v in arcs:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"arc ({u}, {v}) out of range")
            normalised.append((u, v) if u <= v else (v, u))
        self.arcs: Tuple[Arc, ...] = tuple(sorted(normalised))

    def degree(self, v: int) -> int:
        return sum(2 if u == w == v else (u == v) + (w == v)
                   for u, w in self.arcs)

    def loops_at(self, v: int) -> int:
        return sum(1 for u, w in self.arcs if u == w == v)

    @property
    def loop_count(self) -> int:
        return sum(1 for u, w in self.arcs if u == w)

    def neighbours(self, v: int) -> Set[int]:
        """Nodes adjacent to ``v`` through non-loop arcs."""
        out = set()
        for u, w in self.arcs:
            if u == v and w != v:
                out.add(w)
            elif w == v and u != v:
                out.add(u)
        return out

    def adjacency(self) -> List[List[int]]:
        """Non-loop arc multiset as adjacency lists (parallel arcs repeated)."""
        adj: List[List[int]] = [[] for _ in range(self.node_count)]
        for u, w in self.arcs:
            if u != w:
                adj[u].append(w)
                adj[w].append(u)
        return adj

    def without_loops(self) -> "Multigraph":
        return Multigraph(self.node_count,
                          [a for a in self.arcs if a[0] != a[1]])

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        adj = self.adjacency()
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.node_count

    def regular_degree(self) -> Optional[int]:
        degs = {self.degree(v) for v in range(self.node_count)}
        return degs.pop() if len(degs) == 1 else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.node_count == other.node_count and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.node_count, self.arcs))

    def __repr__(self) -> str:
        return f"Multigraph(nodes={self.node_count}, arcs={len(self.arcs)})"


def dual_graph(t: Triangulation) -> Multigraph:
    """One node per facet, one arc per gluing (loops for self-gluings)."""
    return Multigraph(t.size, [(g.facet, g.other_facet) for g in t.gluings()])


@dataclass(frozen=True)
class Component:
    nodes: FrozenSet[int]
    arcs: Tuple[Arc, ...]

    @property
    def is_loop(self) -> bool:
        return len(self.arcs) == 1 and self.arcs[0][0] == self.arcs[0][1]


@dataclass(frozen=True)
class BlockDecomposition:
    """Either the cut-node or the separating-node decomposition of a graph.

    ``tree`` is the bipartite block tree: adjacency over ``("comp", i)``
    and ``("node", v)`` entries.
    """

    kind: str                      # "cut" or "separating"
    components: Tuple[Component, ...]
    nodes: Tuple[int, ...]         # cut or separating nodes, sorted
    tree: Dict[TreeNode, Tuple[TreeNode, ...]] = field(default_factory=dict)

    def leaves(self) -> Tuple[TreeNode, ...]:
        if len(self.tree) == 1:
            return tuple(self.tree)
        return tuple(n for n, nbrs in self.tree.items() if len(nbrs) == 1)


def _biconnected_blocks(g: Multigraph) -> Tuple[List[List[Arc]], Set[int]]:
    """Blocks (as arc lists) and articulation points, loops ignored."""
    edges = [(u, v) for u, v in g.arcs if u != v]
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(g.node_count)]
    for idx, (u, v) in enumerate(edges):
        adj[u].append((idx, v))
        adj[v].append((idx, u))

    disc = [-1] * g.node_count
    low = [0] * g.node_count
    blocks: List[List[Arc]] = []
    cut: Set[int] = set()
    counter = 0
    edge_stack: List[int] = []

    for root in range(g.node_count):
        if disc[root] != -1 or not adj[root]:
            continue
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for edge_id, w in it:
                if edge_id == parent_edge:
                    continue
                if disc[w] == -1:
                    edge_stack.append(edge_id)
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, edge_id, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(edge_id)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u, parent_edge_u, _ = stack[-1]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    # u separates v's subtree: pop one block.
                    if u == root:
                        root_children += 1
                        if root_children > 1:
                            cut.add(root)
                    else:
                        cut.add(u)
                    block = []
                    while True:
                        eid = edge_stack.pop()
                        block.append(edges[eid])
                        if eid == parent_edge:
                            break
                    blocks.append(block)
    return blocks, cut


def block_decompositions(
        g: Multigraph) -> Tuple[BlockDecomposition, BlockDecomposition]:
    """The cut-node and separating-node decompositions of a connected graph."""
    if not g.is_connected():
        raise ValueError("block decompositions need a connected graph")

    blocks, cut_nodes = _biconnected_blocks(g)
    components = [Component(frozenset(u for a in blk for u in a),
                            tuple(sorted(blk)))
                  for blk in blocks]
    if g.node_count == 1 and not components and g.loop_count == 0:
        components = [Component(frozenset({0}), ())]
    components.sort(key=lambda c: (sorted(c.nodes), c.arcs))

    cut_sorted = tuple(sorted(cut_nodes))
    cut_dec = BlockDecomposition(
        kind="cut", components=tuple(components), nodes=cut_sorted,
        tree=_block_tree(components, cut_sorted))

    loops = [a for a in g.arcs if a[0] == a[1]]
    sep_components = list(components)
    if g.node_count == 1 and loops:
        sep_components = []
    for a in loops:
        sep_components.append(Component(frozenset({a[0]}), (a,)))
    sep_components.sort(key=lambda c: (sorted(c.nodes), c.arcs))
    separating = set(cut_nodes)
    for v in range(g.node_count):
        if g.loops_at(v) and g.neighbours(v):
            separating.add(v)
    sep_sorted = tuple(sorted(separating))
    sep_dec = BlockDecomposition(
        kind="separating", components=tuple(sep_components), nodes=sep_sorted,
        tree=_block_tree(sep_components, sep_sorted))
    return cut_dec, sep_dec


def _block_tree(components: Sequence[Component],
                nodes: Sequence[int]) -> Dict[TreeNode, Tuple[TreeNode, ...]]:
    tree: Dict[TreeNode, List[TreeNode]] = {}
    for i in range(len(components)):
        tree[("comp", i)] = []
    for v in nodes:
        tree[("node", v)] = []
    node_set = set(nodes)
    for i, comp in enumerate(components):
        for v in comp.nodes:
            if v in node_set:
                tree[("comp", i)].append(("node", v))
                tree[("node", v)].append(("comp", i))
    return {k: tuple(sorted(v)) for k, v in tree.items()}


def branching_number(g: Multigraph) -> int:
    """1 for one-node non-separable graphs, 2 for larger non-separable
    graphs, otherwise the number of leaves of the block-separating tree."""
    if not g.is_connected():
        raise ValueError("branching number needs a connected graph")
    _, sep = block_decompositions(g)
    if not sep.nodes:
        return 1 if g.node_count == 1 else 2
    return sum(1 for kind, _ in sep.leaves() if kind == "comp")


# -- node sequences and critical points ---------------------------------------


def crit_of_sequence(g: Multigraph, seq: Sequence[int]) -> int:
    """Number of critical points (sources or sinks) of a node sequence."""
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise ValueError("sequence nodes must be distinct")
    pos = {v: k for k, v in enumerate(seq)}
    for v in seq:
        if not 0 <= v < g.node_count:
            raise ValueError(f"node {v} out of range")
    crit = 0
    for v in seq:
        listed = [pos[w] for w in g.neighbours(v) if w in pos]
        source = all(p > pos[v] for p in listed)
        sink = all(p < pos[v] for p in listed)
        if source or sink:
            crit += 1
    return crit


def crit_bruteforce(g: Multigraph, max_nodes: int = 9) -> int:
    """Minimum number of critical points over all full node sequences.

    Exhaustive over orderings via dynamic programming on placed subsets:
    whether a node is a source (no neighbour placed before) or a sink
    (all neighbours placed before) is decided at its placement.
    """
    if not g.is_connected():
        raise ValueError("crit needs a connected graph")
    n = g.node_count
    if n > max_nodes:
        raise ValueError(f"graph too large for exhaustive crit ({n} > {max_nodes})")
    masks = [0] * n
    for v in range(n):
        for w in g.neighbours(v):
            masks[v] |= 1 << w
    full = (1 << n) - 1
    best = [0] * (full + 1)
    for subset in range(1, full + 1):
        b = None
        after = full ^ subset
        rest = subset
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            before = subset ^ bit
            source = (masks[v] & before) == 0
            sink = (masks[v] & after) == 0
            cost = best[before] + (1 if (source or sink) else 0)
            if b is None or cost < b:
                b = cost
        best[subset] = b
    return best[full]


def _shortest_lex_path(adj: Dict[int, Set[int]], first: int, last: int) -> List[int]:
    # BFS distances from first, then walk back from last picking the
    # smallest predecessor: shortest path, deterministic.
    dist = {first: 0}
    frontier = [first]
    while frontier and last not in dist:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    if last not in dist:
        raise ValueError("nodes lie in different components")
    path = [last]
    while path[-1] != first:
        v = path[-1]
        path.append(min(w for w in adj[v] if dist.get(w) == dist[v] - 1))
    path.reverse()
    return path


def _crit2_sequence(nodes: Set[int], adj: Dict[int, Set[int]],
                    first: int, last: int) -> List[int]:
    # Covering sequence of a 2-connected subgraph with exactly two critical
    # points, from first to last: start from a path, then repeatedly insert
    # paths of remaining nodes between two distinct attachment points.
    if first == last:
        if len(nodes) != 1:
            raise ValueError("first and last must differ in a multi-node graph")
        return [first]
    seq = _shortest_lex_path(adj, first, last)
    in_seq = set(seq)
    remaining = set(nodes) - in_seq
    while remaining:
        candidates = sorted(v for v in remaining if adj[v] & in_seq)
        v = candidates[0]
        w = min(adj[v] & in_seq)
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in remaining and y not in comp:
                    comp.add(y)
                    stack.append(y)
        attach = sorted((x, min(a for a in adj[x] & in_seq if a != w))
                        for x in sorted(comp)
                        if (adj[x] & in_seq) - {w})
        if not attach:
            raise ValueError("subgraph is not 2-connected")
        v2, w2 = attach[0]
        sub_adj = {x: adj[x] & comp for x in comp}
        path = _shortest_lex_path(sub_adj, v, v2)
        pos = {x: k for k, x in enumerate(seq)}
        if pos[w2] > pos[w]:
            seq[pos[w] + 1:pos[w] + 1] = path
        else:
            seq[pos[w2] + 1:pos[w2] + 1] = list(reversed(path))
        in_seq.update(path)
        remaining.difference_update(path)
    return seq


def two_connected_sequence(g: Multigraph, first: int, last: int) -> Tuple[int, ...]:
    """A covering sequence with two critical points of a 2-connected graph,
    starting and ending at the given nodes."""
    if g.node_count < 2:
        raise ValueError("needs at least two nodes")
    cut_dec, _ = block_decompositions(g)
    if cut_dec.nodes or g.loop_count:
        raise ValueError("graph must be 2-connected and loopless")
    adj = {v: g.neighbours(v) for v in range(g.node_count)}
    seq = _crit2_sequence(set(range(g.node_count)), adj, first, last)
    return tuple(seq)


def construct_low_crit_sequence(g: Multigraph) -> Tuple[int, ...]:
    """A covering sequence of a loopless connected graph whose number of
    critical points equals the branching number, with a single source.

    Built by ordering the 2-connected components breadth-first through the
    block-cut tree from a leaf component, threading each component between
    prescribed first and last nodes.
    """
    if g.loop_count:
        raise ValueError("loops must be expanded away first")
    if not g.is_connected():
        raise ValueError("needs a connected graph")
    if g.node_count == 1:
        return (0,)
    adj = {v: g.neighbours(v) for v in range(g.node_count)}
    cut_dec, _ = block_decompositions(g)
    if not cut_dec.nodes:
        return two_connected_sequence(g, min(range(g.node_count)),
                                      max(range(g.node_count)))

    tree = cut_dec.tree
    comp_leaves = [i for kind, i in cut_dec.leaves() if kind == "comp"]
    root = ("comp", min(comp_leaves))
    # Breadth-first order of components, remembering the cut node through
    # which each was reached.
    order: List[Tuple[int, Optional[int]]] = [(root[1], None)]
    seen = {root}
    frontier = [root]
    parent_cut: Dict[int, Optional[int]] = {root[1]: None}
    while frontier:
        nxt = []
        for tn in frontier:
            for nb in tree[tn]:
                if nb in seen:
                    continue
                seen.add(nb)
                if nb[0] == "comp":
                    via = tn[1]     # tn is a ("node", v) tree entry
                    parent_cut[nb[1]] = via
                    order.append((nb[1], via))
                nxt.append(nb)
        frontier = nxt

    cut_set = set(cut_dec.nodes)
    seq: List[int] = []
    for comp_idx, via in order:
        comp = cut_dec.components[comp_idx]
        comp_cuts = sorted(comp.nodes & cut_set)
        is_leaf = len(tree[("comp", comp_idx)]) <= 1
        if via is None:
            last = comp_cuts[0]
            first = min(comp.nodes - {last})
        elif is_leaf:
            first = via
            last = min(comp.nodes - {first})
        else:
            first = via
            last = min(v for v in comp_cuts if v != via)
        sub_adj = {v: adj[v] & comp.nodes for v in comp.nodes}
        part = _crit2_sequence(set(comp.nodes), sub_adj, first, last)
        if via is None:
            seq = part
        else:
            at = seq.index(via)
            seq[at + 1:at + 1] = part[1:]
    return tuple(seq)


@dataclass(frozen=True)
class CutProfile:
    """Backward/forward arc counts and running cut sizes along a sequence."""

    backward: Tuple[int, ...]
    forward: Tuple[int, ...]
    cut: Tuple[int, ...]
    case_tags: Optional[Tuple[str, ...]] = None

    @property
    def final_cut(self) -> int:
        return self.cut[-1]


def cut_profile(g: Multigraph, seq: Sequence[int]) -> CutProfile:
    """Arc counts across each prefix of a full node sequence.

    Position ``k`` (1-based) records the arcs from ``seq[k-1]`` backward
    and forward, and the number of arcs crossing the prefix boundary.
    When the graph is regular of degree ``d + 1``, each position after
    the first is tagged by which of the three backward-count regimes
    (``B = 1``, ``2 <= B <= d``, ``B = d + 1``) it falls in.
    """
    seq = tuple(seq)
    if sorted(seq) != list(range(g.node_count)):
        raise ValueError("sequence must cover every node exactly once")
    pos = {v: k for k, v in enumerate(seq)}
    backward, forward = [], []
    for v in seq:
        b = f = 0
        for x, y in g.arcs:
            if x == y:
                continue
            if x == v:
                other = y
            elif y == v:
                other = x
            else:
                continue
            if pos[other] < pos[v]:
                b += 1
            else:
                f += 1
        backward.append(b)
        forward.append(f)
    cut = []
    c = 0
    for b, f in zip(backward, forward):
        c += f - b
        cut.append(c)
    tags = None
    reg = g.regular_degree()
    if reg is not None and reg >= 2:
        d = reg - 1
        tags = tuple(
            "start" if k == 0 else
            ("B=1" if b == 1 else ("B=d+1" if b == d + 1 else "2<=B<=d"))
            for k, b in enumerate(backward))
    return CutProfile(tuple(backward), tuple(forward), tuple(cut), tags)


@dataclass(frozen=True)
class TheoremBoundReport:
    """Outcome of the branching-number bound on a closed even-dimensional
    triangulation, with the witnessing sequence and its cut profile."""

    dim: int
    f_vector: Tuple[int, ...]
    delta: Fraction
    branch: int
    branch_after_expansion: int
    bound: int
    holds: bool
    loops_expanded: int
    graph: "Multigraph"                   # dual graph of the input
    loopless_graph: "Multigraph"          # after expanding the loops away
    sequence: Tuple[int, ...]
    profile: CutProfile
    case_counts: Tuple[int, int, int]     # B=1, middle, B=d+1 (positions >= 2)


def theorem_bound_check(t: Triangulation) -> TheoremBoundReport:
    """Check ``delta <= d + floor((branch - 2) / (d - 1))`` constructively.

    Loops of the dual graph are expanded away by vertex moves first; the
    witnessing sequence comes from :func:`construct_low_crit_sequence` on
    the loopless graph.
    """
    from .moves import remove_loops     # local import: moves builds on this module

    if t.dim % 2 != 0 or t.dim < 2:
        raise ValueError("the bound applies to even dimensions >= 2")
    if not t.is_closed():
        raise ValueError("the bound applies to closed triangulations")
    if not t.is_connected():
        raise ValueError("the bound applies to connected triangulations")

    g = dual_graph(t)
    branch = branching_number(g)
    expanded = remove_loops(t)
    g2 = dual_graph(expanded)
    branch2 = branching_number(g2)
    seq = construct_low_crit_sequence(g2)
    profile = cut_profile(g2, seq)

    d = t.dim
    x = sum(1 for b in profile.backward[1:] if b == 1)
    y = sum(1 for b in profile.backward[1:] if 2 <= b <= d)
    z = sum(1 for b in profile.backward[1:] if b == d + 1)
    f = t.f_vector()
    delta = Fraction(f[0]) - Fraction(f[d], 2)
    bound = d + (branch - 2) // (d - 1)
    return TheoremBoundReport(
        dim=d, f_vector=f, delta=delta, branch=branch,
        branch_after_expansion=branch2, bound=bound,
        holds=delta <= bound, loops_expanded=g.loop_count,
        graph=g, loopless_graph=g2,
        sequence=seq, profile=profile, case_counts=(x, y, z))
