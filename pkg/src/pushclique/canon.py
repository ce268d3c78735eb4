"""Canonical labelling by individualisation-refinement.

The canonical representative is the leaf of the search tree whose relabelled
adjacency code (graph6 bit order, first bit most significant) is largest.
Subtrees are pruned with twin transpositions and with automorphisms found
between equal leaves, which is ample for the orders used here.
"""
from __future__ import annotations

from typing import Sequence

from .formats import emit_graph6
from .graph import UndirectedGraph

CanonicalKey = bytes


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            mk = 0
            for v in cell:
                mk |= 1 << v
            masks.append(mk)
        changed = False
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                groups.setdefault(tuple((a & mk).bit_count() for mk in masks), []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    new.append(groups[sig])
            else:
                new.append(cell)
        cells = new
        if not changed:
            return cells


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def canonical_order(g: UndirectedGraph) -> list[int]:
    """Vertices in canonical position order."""
    adj = g.adj
    n = g.n
    best: list = [None, None]  # code, order
    first: list = [None, None]
    autos: list[tuple[int, ...]] = []

    def leaf(order: list[int]) -> None:
        code = _code(adj, order)
        if first[0] is None:
            first[:] = [code, order]
            best[:] = [code, order]
            return
        for ref_code, ref_order in (first, best):
            if code == ref_code:
                gamma = [0] * n
                for a, b in zip(ref_order, order):
                    gamma[a] = b
                autos.append(tuple(gamma))
                return
        if code > best[0]:
            best[:] = [code, order]

    def search(cells: list[list[int]], path: list[int]) -> None:
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            leaf([c[0] for c in cells])
            return
        cell = cells[idx]
        explored: list[int] = []
        for v in cell:
            av = adj[v]
            if any((adj[u] & ~(1 << v)) == (av & ~(1 << u)) for u in explored):
                continue
            if explored and autos:
                parent = list(range(n))
                for gamma in autos:
                    if all(gamma[p] == p for p in path):
                        for x in range(n):
                            rx, ry = _find(parent, x), _find(parent, gamma[x])
                            if rx != ry:
                                parent[rx] = ry
                rv = _find(parent, v)
                if any(_find(parent, u) == rv for u in explored):
                    continue
            explored.append(v)
            rest = [w for w in cell if w != v]
            search(_refine(adj, cells[:idx] + [[v], rest] + cells[idx + 1:]), path + [v])

    search(_refine(adj, [list(range(n))]), [])
    return best[1]


def canonical_form(g: UndirectedGraph) -> tuple[CanonicalKey, tuple[int, ...]]:
    """Return ``(key, perm)`` with ``g.relabel(perm)`` the canonical representative."""
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    perm_t = tuple(perm)
    return emit_graph6(g.relabel(perm_t)).encode("ascii"), perm_t


def canonical_key(g: UndirectedGraph) -> CanonicalKey:
    return canonical_form(g)[0]


def canonical_graph(g: UndirectedGraph) -> UndirectedGraph:
    return g.relabel(canonical_form(g)[1])


def automorphisms(g: UndirectedGraph) -> list[tuple[int, ...]]:
    """All automorphisms of ``g`` by plain backtracking (small graphs only)."""
    n = g.n
    adj = g.adj
    deg = g.degrees()
    found: list[tuple[int, ...]] = []
    img = [-1] * n

    def extend(v: int, used: int) -> None:
        if v == n:
            found.append(tuple(img))
            return
        for w in range(n):
            if used >> w & 1 or deg[w] != deg[v]:
                continue
            if all((adj[v] >> u & 1) == (adj[w] >> img[u] & 1) for u in range(v)):
                img[v] = w
                extend(v + 1, used | 1 << w)
        img[v] = -1

    extend(0, 0)
    return found
