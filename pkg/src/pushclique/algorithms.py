"""Exact small-graph algorithms on bitset adjacency.

Everything here is exhaustive search; it is meant for graphs on at most 16
vertices and in practice is exercised on graphs of order at most 8.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .graph import UndirectedGraph, bits

K5 = UndirectedGraph.complete(5)
K33 = UndirectedGraph.complete_bipartite(3, 3)
_TARGETS = {"K5": K5, "K33": K33, "K3,3": K33}

Adj = tuple[int, ...]


def is_connected(g: UndirectedGraph) -> bool:
    return _connected(g.adj)


def _connected(adj: Sequence[int]) -> bool:
    n = len(adj)
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def _embeds(adj_g: Sequence[int], adj_h: Sequence[int]) -> bool:
    """True iff some injection V(h) -> V(g) maps edges of h onto edges of g."""
    ng, nh = len(adj_g), len(adj_h)
    if nh > ng:
        return False
    deg_g = [a.bit_count() for a in adj_g]
    deg_h = [a.bit_count() for a in adj_h]
    if sum(deg_h) > sum(deg_g):
        return False
    if any(a > b for a, b in zip(sorted(deg_h, reverse=True), sorted(deg_g, reverse=True))):
        return False
    # connectivity-first order: each vertex follows one of its neighbours when possible
    order: list[int] = []
    placed = 0
    remaining = set(range(nh))
    while remaining:
        frontier = [v for v in remaining if adj_h[v] & placed]
        pool = frontier or list(remaining)
        v = max(pool, key=lambda x: ((adj_h[x] & placed).bit_count(), deg_h[x], -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    earlier = []
    seen = 0
    for v in order:
        earlier.append([u for u in bits(adj_h[v] & seen)])
        seen |= 1 << v
    by_degree = [0] * (nh and max(deg_h) + 1)
    for d in range(len(by_degree)):
        for w in range(ng):
            if deg_g[w] >= d:
                by_degree[d] |= 1 << w
    img = [0] * nh

    def extend(k: int, used: int) -> bool:
        if k == nh:
            return True
        v = order[k]
        cand = by_degree[deg_h[v]] & ~used
        for u in earlier[k]:
            cand &= adj_g[img[u]]
        for w in bits(cand):
            img[v] = w
            if extend(k + 1, used | 1 << w):
                return True
        return False

    return extend(0, 0)


def contains_subgraph(g: UndirectedGraph, h: UndirectedGraph) -> bool:
    return _embeds(g.adj, h.adj)


def contains_spanning_subgraph(g: UndirectedGraph, h: UndirectedGraph) -> bool:
    if g.n != h.n:
        raise ValueError(f"spanning containment needs equal orders, got {g.n} and {h.n}")
    return _embeds(g.adj, h.adj)


# -- minors -----------------------------------------------------------------

def _delete(adj: Adj, v: int) -> Adj:
    low = (1 << v) - 1
    return tuple((a & low) | (a >> (v + 1) << v) for i, a in enumerate(adj) if i != v)


def _contract(adj: Adj, u: int, v: int) -> Adj:
    merged = list(adj)
    merged[u] = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    for w in bits(adj[v]):
        if w != u:
            merged[w] |= 1 << u
    return _delete(tuple(merged), v)


def _suppress_low_degree(adj: Adj) -> Adj:
    """Delete vertices of degree <= 1 and smooth degree-2 vertices.

    Sound for minors of graphs with minimum degree 3: such a minor survives
    these operations whenever it was present before.
    """
    while True:
        for v, a in enumerate(adj):
            d = a.bit_count()
            if d <= 1:
                adj = _delete(adj, v)
                break
            if d == 2:
                x, y = bits(a)
                adj = _contract(adj, x, v) if x < v else _contract(adj, v, x)
                break
        else:
            return adj


def _edge_list(adj: Adj) -> list[tuple[int, int]]:
    return [(u, v) for u, a in enumerate(adj) for v in bits(a >> (u + 1) << (u + 1))]


def _minor_search(adj: Adj, targets: Sequence[UndirectedGraph], memo: dict, euler: bool) -> bool:
    reduce_ok = all(min(t.degrees()) >= 3 for t in targets)
    if reduce_ok:
        adj = _suppress_low_degree(adj)
    if adj in memo:
        return memo[adj]
    n = len(adj)
    m = sum(a.bit_count() for a in adj) // 2
    live = [t for t in targets if t.n <= n and t.m <= m]
    if not live:
        memo[adj] = False
        return False
    if euler and n >= 3 and m > 3 * n - 6:
        memo[adj] = True
        return True
    if any(_embeds(adj, t.adj) for t in live):
        memo[adj] = True
        return True
    found = False
    if n > min(t.n for t in live):
        children = [_delete(adj, v) for v in range(n)]
        children += [_contract(adj, u, v) for u, v in _edge_list(adj)]
        found = any(_minor_search(c, live, memo, euler) for c in children)
    memo[adj] = found
    return found


def has_minor(g: UndirectedGraph, target: Union[str, UndirectedGraph]) -> bool:
    """Exact minor test by deletion/contraction search down to the target order."""
    if isinstance(target, str):
        if target not in _TARGETS:
            raise ValueError(f"unknown minor target {target!r}; expected one of {sorted(_TARGETS)}")
        h = _TARGETS[target]
    else:
        h = target
    return _minor_search(g.adj, [h], {}, euler=False)


def is_planar(g: UndirectedGraph) -> bool:
    """Planar iff no K5 minor and no K3,3 minor.

    Graphs with more than 3n - 6 edges are reported non-planar directly; that
    shortcut is only a speed-up, the minor search reaches the same answer.
    """
    return not _minor_search(g.adj, [K5, K33], {}, euler=True)


# -- Hamiltonian cycles -----------------------------------------------------

def hamiltonian_cycles(g: UndirectedGraph) -> list[tuple[int, ...]]:
    """All Hamiltonian cycles, each listed once.

    A cycle is written from vertex 0 with the smaller of its two cycle
    neighbours second.  The list is sorted.
    """
    n = g.n
    if n < 3:
        return []
    adj = g.adj
    full = (1 << n) - 1
    found: list[tuple[int, ...]] = []
    path = [0]

    def extend(v: int, used: int) -> None:
        if used == full:
            if adj[v] & 1 and path[1] < path[-1]:
                found.append(tuple(path))
            return
        for w in bits(adj[v] & ~used):
            path.append(w)
            extend(w, used | 1 << w)
            path.pop()

    extend(0, 1)
    found.sort()
    return found


def is_hamiltonian_cycle(g: UndirectedGraph, cycle: Sequence[int]) -> bool:
    if sorted(cycle) != list(range(g.n)) or g.n < 3:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n))


# -- simple structure -------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    graph: UndirectedGraph
    min_degree: int
    dominating_vertices: tuple[int, ...]
    is_connected: bool

    @property
    def dominating_vertex_exists(self) -> bool:
        return bool(self.dominating_vertices)

    def common_neighbors(self, u: int, v: int) -> tuple[int, ...]:
        return common_neighbors(self.graph, u, v)


def common_neighbors(g: UndirectedGraph, u: int, v: int) -> tuple[int, ...]:
    return tuple(bits(g.adj[u] & g.adj[v]))


def dominating_vertices(g: UndirectedGraph) -> tuple[int, ...]:
    full = (1 << g.n) - 1
    return tuple(v for v in range(g.n) if g.adj[v] | 1 << v == full)


def structure_predicates(g: UndirectedGraph) -> StructureReport:
    return StructureReport(
        graph=g,
        min_degree=min(g.degrees()),
        dominating_vertices=dominating_vertices(g),
        is_connected=is_connected(g),
    )
