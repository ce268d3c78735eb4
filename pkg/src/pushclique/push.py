"""Push operation, push-clique deciders and push-equivalence classes.

Pushing a vertex set S reverses every arc with exactly one end in S.  For a
non-adjacent pair u, v and a common neighbour w, pushing S flips whether the
2-path u-w-v is directed iff exactly one of u, v lies in S, independently of
w.  So a pair survives every push iff it sees both a directed and an
anti-directed 2-path; ``is_push_clique_fast`` checks exactly that, and
``is_push_clique_oracle`` checks it the slow way over all 2^(n-1) pushes.
"""
from __future__ import annotations

from collections import deque
from enum import Enum
from typing import Iterator, Optional

from .algorithms import is_connected
from .graph import MAX_ORDER, CapacityError, OrientedGraph, UndirectedGraph, VertexSet, bits


class ReachMode(str, Enum):
    TWO_COMMON_NEIGHBORS = "two-cn"
    DIAMETER_TWO = "diam2"


def push(d: OrientedGraph, s: VertexSet | int) -> OrientedGraph:
    mask = s.bits if isinstance(s, VertexSet) else s
    if mask >> d.n:
        raise ValueError("push set has vertices outside the graph")
    adj = d.underlying.adj
    out = []
    for v, o in enumerate(d.out):
        flip = adj[v] & (~mask if mask >> v & 1 else mask)
        out.append(o ^ flip)
    return OrientedGraph(d.underlying, tuple(out))


def _oclique_out(n: int, adj: tuple[int, ...], out: tuple[int, ...]) -> bool:
    # u ~> v in two steps iff out[u] meets the in-neighbourhood of v
    inn = [a & ~o for a, o in zip(adj, out)]
    for u in range(n):
        far = ((1 << n) - 1) & ~adj[u] & ~((1 << (u + 1)) - 1)
        for v in bits(far):
            if not (out[u] & inn[v] or out[v] & inn[u]):
                return False
    return True


def is_oclique(d: OrientedGraph) -> bool:
    """Every pair adjacent or joined by a directed 2-path in some direction."""
    return _oclique_out(d.n, d.underlying.adj, d.out)


def is_push_clique_oracle(d: OrientedGraph) -> bool:
    if d.n > MAX_ORDER:
        raise CapacityError(f"order {d.n} exceeds {MAX_ORDER}")
    # S and its complement give the same push, so fix vertex n-1 outside S
    return all(is_oclique(push(d, s)) for s in range(1 << (d.n - 1)))


def parity_profile(d: OrientedGraph, u: int, v: int) -> dict[int, int]:
    """Map each common neighbour w of u, v to 0 (u-w-v directed) or 1 (anti-directed)."""
    if u == v:
        raise ValueError("parity profile needs two distinct vertices")
    adj = d.underlying.adj
    prof = {}
    for w in bits(adj[u] & adj[v]):
        uw = d.out[u] >> w & 1
        wv = d.out[w] >> v & 1
        prof[w] = 0 if uw == wv else 1
    return prof


def _push_clique_out(n: int, adj: tuple[int, ...], out: tuple[int, ...], pairs) -> bool:
    inn = [a & ~o for a, o in zip(adj, out)]
    for u, v in pairs:
        ou, ov, iu, iv = out[u], out[v], inn[u], inn[v]
        if not ((ou & iv) | (iu & ov)) or not ((ou & ov) | (iu & iv)):
            return False
    return True


def _non_adjacent_pairs(g: UndirectedGraph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.adj[u] >> v & 1]


def is_push_clique_fast(d: OrientedGraph) -> bool:
    """Every non-adjacent pair has both a directed and an anti-directed 2-path."""
    g = d.underlying
    return _push_clique_out(g.n, g.adj, d.out, _non_adjacent_pairs(g))


def _bfs_tree(g: UndirectedGraph) -> tuple[list[tuple[int, int]], list[int]]:
    """Tree arcs (parent, child) from vertex 0 and the BFS visiting order."""
    parent = [-1] * g.n
    seen = 1
    order = [0]
    arcs = []
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u] & ~seen):
            seen |= 1 << w
            parent[w] = u
            arcs.append((u, w))
            order.append(w)
            queue.append(w)
    if seen != (1 << g.n) - 1:
        raise ValueError("graph is disconnected")
    return arcs, order


def _class_rep_parts(g: UndirectedGraph):
    tree_arcs, _ = _bfs_tree(g)
    tree = {(min(a, b), max(a, b)) for a, b in tree_arcs}
    cotree = [e for e in g.edges() if e not in tree]
    base = [0] * g.n
    for a, b in tree_arcs:
        base[a] |= 1 << b
    return base, cotree


def orientation_class_reps(g: UndirectedGraph) -> Iterator[OrientedGraph]:
    """One orientation per push class: BFS-tree arcs point parent to child.

    Cotree edges are enumerated in ``edges()`` order with bit i of the counter
    set meaning the i-th cotree edge points from its lower to its higher end.
    """
    base, cotree = _class_rep_parts(g)
    for word in range(1 << len(cotree)):
        out = list(base)
        for i, (a, b) in enumerate(cotree):
            if word >> i & 1:
                out[a] |= 1 << b
            else:
                out[b] |= 1 << a
        yield OrientedGraph(g, tuple(out))


def push_normal_form(d: OrientedGraph) -> OrientedGraph:
    """The class representative push-equivalent to ``d``."""
    tree_arcs, _ = _bfs_tree(d.underlying)
    s = 0
    for p, c in tree_arcs:
        forward = d.out[p] >> c & 1
        # after pushing, p->c must hold: c joins S iff the arc currently points back
        if (s >> p & 1) ^ (not forward):
            s |= 1 << c
    return push(d, s)


def are_push_equivalent(d1: OrientedGraph, d2: OrientedGraph) -> bool:
    if d1.underlying != d2.underlying:
        raise ValueError("push equivalence needs the same underlying graph")
    return push_normal_form(d1) == push_normal_form(d2)


def is_reach_complete(g: UndirectedGraph, mode: ReachMode | str = ReachMode.TWO_COMMON_NEIGHBORS) -> bool:
    need = 2 if ReachMode(mode) is ReachMode.TWO_COMMON_NEIGHBORS else 1
    return all((g.adj[u] & g.adj[v]).bit_count() >= need for u, v in _non_adjacent_pairs(g))


def is_underlying_push_clique(g: UndirectedGraph, oracle: bool = False) -> Optional[OrientedGraph]:
    """A push-clique orientation of ``g``, or ``None`` if there is none."""
    if g.n > MAX_ORDER:
        raise CapacityError(f"order {g.n} exceeds {MAX_ORDER}")
    if g.n == 1:
        return OrientedGraph(g, (0,))
    if not is_connected(g):
        return None
    if not oracle and not is_reach_complete(g):
        return None
    if oracle:
        for d in orientation_class_reps(g):
            if is_push_clique_oracle(d):
                return d
        return None
    pairs = _non_adjacent_pairs(g)
    base, cotree = _class_rep_parts(g)
    adj = g.adj
    for word in range(1 << len(cotree)):
        out = list(base)
        for i, (a, b) in enumerate(cotree):
            if word >> i & 1:
                out[a] |= 1 << b
            else:
                out[b] |= 1 << a
        if _push_clique_out(g.n, adj, out, pairs):
            return OrientedGraph(g, tuple(out))
    return None
