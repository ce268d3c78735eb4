"""Bitset graph types: undirected graphs, orientations and vertex sets.

Vertices are ``0..n-1`` and every neighbourhood is an ``int`` bitmask, so
all types here are small immutable values that hash and compare cheaply.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 16


class CapacityError(ValueError):
    """Raised when a graph exceeds the supported vertex count."""


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise CapacityError(f"order {n} outside supported range 1..{MAX_ORDER}")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"vertex set {self.bits:#x} not within 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return cls(mask, n)

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple graph on at most 16 vertices; ``adj[v]`` is the neighbour mask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for u, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {u} has a neighbour outside the graph")
            if nb >> u & 1:
                raise ValueError(f"self-loop at {u}")
            for v in bits(nb):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "UndirectedGraph":
        _check_order(n)
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "UndirectedGraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "UndirectedGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "UndirectedGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "UndirectedGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "UndirectedGraph":
        return cls.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def add_edge(self, u: int, v: int) -> "UndirectedGraph":
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return UndirectedGraph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "UndirectedGraph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return UndirectedGraph(self.n, tuple(adj))

    def add_vertex(self, neighbours: int) -> "UndirectedGraph":
        """Append vertex ``n`` adjacent to the vertices in mask ``neighbours``."""
        new = self.n
        adj = [nb | ((neighbours >> u & 1) << new) for u, nb in enumerate(self.adj)]
        adj.append(neighbours)
        return UndirectedGraph(self.n + 1, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "UndirectedGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for u in range(self.n):
            mask = 0
            for v in bits(self.adj[u]):
                mask |= 1 << perm[v]
            adj[perm[u]] = mask
        return UndirectedGraph(self.n, tuple(adj))

    def complement(self) -> "UndirectedGraph":
        full = (1 << self.n) - 1
        return UndirectedGraph(self.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(self.adj)))

    def __str__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class OrientedGraph:
    """Orientation of ``underlying``; ``out[v]`` is the out-neighbour mask of v."""

    underlying: UndirectedGraph
    out: tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.underlying
        if len(self.out) != g.n:
            raise ValueError("out-neighbourhood length does not match order")
        for v, o in enumerate(self.out):
            if o & ~g.adj[v]:
                raise ValueError(f"arc from {v} without an underlying edge")
        for u, v in g.edges():
            fwd = self.out[u] >> v & 1
            back = self.out[v] >> u & 1
            if fwd == back:
                raise ValueError(f"edge {u}-{v} must carry exactly one arc")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> "OrientedGraph":
        arcs = list(arcs)
        g = UndirectedGraph.from_edges(n, arcs)
        out = [0] * n
        for u, v in arcs:
            out[u] |= 1 << v
        return cls(g, tuple(out))

    @property
    def n(self) -> int:
        return self.underlying.n

    @property
    def into(self) -> tuple[int, ...]:
        return tuple(a & ~o for a, o in zip(self.underlying.adj, self.out))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.out[u])]

    def orientation_bits(self) -> int:
        """One bit per underlying edge in ``edges()`` order; 1 means low->high."""
        word = 0
        for i, (u, v) in enumerate(self.underlying.edges()):
            word |= (self.out[u] >> v & 1) << i
        return word

    def relabel(self, perm: Sequence[int]) -> "OrientedGraph":
        return OrientedGraph.from_arcs(self.n, [(perm[u], perm[v]) for u, v in self.arcs()])

    def __str__(self) -> str:
        return f"OrientedGraph(n={self.n}, arcs={self.arcs()})"
