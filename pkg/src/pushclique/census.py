"""Isomorph-free enumeration and the planar underlying-push-clique census."""
from __future__ import annotations

import hashlib
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .algorithms import contains_spanning_subgraph, is_connected, is_planar
from .canon import canonical_key
from .formats import emit_digraph6, parse_graph6, write_lines
from .graph import CapacityError, UndirectedGraph
from .push import is_underlying_push_clique

log = logging.getLogger(__name__)

MAX_CENSUS_ORDER = 8
STRETCH_ORDER = 9
CACHE_ENV = "PUSHCLIQUE_CACHE"


def _check_census_order(n: int, stretch: bool) -> None:
    cap = STRETCH_ORDER if stretch else MAX_CENSUS_ORDER
    if not 1 <= n <= cap:
        raise CapacityError(f"census order {n} outside 1..{cap}")


def _sort_key(g6: str) -> tuple[int, str]:
    return parse_graph6(g6).m, g6


def _extend_parents(parents: Sequence[str]) -> set[str]:
    children = set()
    for text in parents:
        g = parse_graph6(text)
        for mask in range(1, 1 << g.n):
            children.add(canonical_key(g.add_vertex(mask)).decode("ascii"))
    return children


def _chunks(items: Sequence, k: int) -> list[list]:
    return [list(items[i::k]) for i in range(k)]


def _pool_map(fn, items: Sequence, threads: int) -> list:
    if threads <= 1 or len(items) < 2:
        return [fn(items)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, _chunks(items, threads)))


def _cache_dir(cache: Optional[str | Path]) -> Optional[Path]:
    if cache is None:
        cache = os.environ.get(CACHE_ENV)
    return Path(cache) if cache else None


def connected_classes(
    max_n: int, threads: int = 1, cache: Optional[str | Path] = None, stretch: bool = False
) -> dict[int, list[str]]:
    """Canonical graph6 strings of all connected graphs of order 1..max_n.

    Each order is built by attaching a new vertex to every connected class of
    the previous order in every possible way and deduplicating canonically;
    every connected graph has a non-cut vertex, so nothing is missed.
    """
    _check_census_order(max_n, stretch)
    cache_dir = _cache_dir(cache)
    classes: dict[int, list[str]] = {1: ["@"]}
    for n in range(2, max_n + 1):
        cached = cache_dir / f"connected_n{n}.g6" if cache_dir else None
        if cached is not None and cached.exists():
            classes[n] = cached.read_text(encoding="ascii").split()
            continue
        parts = _pool_map(_extend_parents, classes[n - 1], threads)
        merged = set().union(*parts)
        classes[n] = sorted(merged, key=_sort_key)
        log.info("order %d: %d connected classes", n, len(classes[n]))
        if cached is not None:
            cached.parent.mkdir(parents=True, exist_ok=True)
            write_lines(cached, classes[n])
    return classes


def enumerate_connected(n: int, threads: int = 1, stretch: bool = False) -> Iterator[UndirectedGraph]:
    for text in connected_classes(n, threads, stretch=stretch)[n]:
        yield parse_graph6(text)


@dataclass(frozen=True)
class CensusRecord:
    order: int
    graph6: str
    edges: int
    planar: bool
    upc: Optional[bool]  # None: not evaluated (non-planar graphs)
    edge_minimal: bool = False
    witness: Optional[str] = None  # digraph6 of a push-clique orientation

    @property
    def graph(self) -> UndirectedGraph:
        return parse_graph6(self.graph6)


def _classify(texts: Sequence[str]) -> list[CensusRecord]:
    out = []
    for text in texts:
        g = parse_graph6(text)
        planar = is_planar(g)
        upc = witness = None
        if planar:
            d = is_underlying_push_clique(g)
            upc = d is not None
            witness = emit_digraph6(d) if d is not None else None
        out.append(CensusRecord(g.n, text, g.m, planar, upc, False, witness))
    return out


def _classify_oracle(texts: Sequence[str]) -> list[CensusRecord]:
    out = []
    for text in texts:
        g = parse_graph6(text)
        planar = is_planar(g)
        upc = witness = None
        if planar:
            d = is_underlying_push_clique(g, oracle=True)
            upc = d is not None
            witness = emit_digraph6(d) if d is not None else None
        out.append(CensusRecord(g.n, text, g.m, planar, upc, False, witness))
    return out


def is_edge_minimal_upc(g: UndirectedGraph) -> bool:
    return all(is_underlying_push_clique(g.remove_edge(u, v)) is None for u, v in g.edges())


@dataclass
class Census:
    max_n: int
    records: dict[int, list[CensusRecord]] = field(default_factory=dict)

    def connected_counts(self) -> dict[int, int]:
        return {n: len(rs) for n, rs in self.records.items()}

    def planar_counts(self) -> dict[int, int]:
        return {n: sum(r.planar for r in rs) for n, rs in self.records.items()}

    def upc_records(self, n: int) -> list[CensusRecord]:
        return [r for r in self.records[n] if r.upc]

    def upc_counts(self) -> dict[int, int]:
        return {n: len(self.upc_records(n)) for n in self.records}

    def minimal_records(self, n: int) -> list[CensusRecord]:
        return [r for r in self.records[n] if r.edge_minimal]

    @property
    def upc_total(self) -> int:
        return sum(self.upc_counts().values())


def census_planar_upc(
    max_n: int,
    threads: int = 1,
    oracle: bool = False,
    cache: Optional[str | Path] = None,
    stretch: bool = False,
) -> Census:
    """Classify every connected graph of order <= max_n (planarity, UPC, minimality)."""
    classes = connected_classes(max_n, threads, cache, stretch)
    census = Census(max_n)
    fn = _classify_oracle if oracle else _classify
    for n, texts in classes.items():
        recs = [r for part in _pool_map(fn, texts, threads) for r in part]
        by_text = {r.graph6: r for r in recs}
        final = []
        for text in texts:
            r = by_text[text]
            if r.upc:
                minimal = is_edge_minimal_upc(r.graph)
                r = CensusRecord(r.order, r.graph6, r.edges, r.planar, r.upc, minimal, r.witness)
            final.append(r)
        census.records[n] = final
        log.info("order %d: %d planar, %d upc", n, sum(r.planar for r in final), sum(bool(r.upc) for r in final))
    return census


@dataclass(frozen=True)
class MinimalGraph:
    label: str
    graph6: str

    @property
    def graph(self) -> UndirectedGraph:
        return parse_graph6(self.graph6)

    @property
    def order(self) -> int:
        return self.graph.n


def minimal_list(census: Census) -> list[MinimalGraph]:
    """Edge-minimal planar UPCs labelled M1, M2, ... by (order, edges, key)."""
    rows = [r for n in sorted(census.records) for r in census.minimal_records(n)]
    rows.sort(key=lambda r: (r.order, r.edges, r.graph6))
    return [MinimalGraph(f"M{i + 1}", r.graph6) for i, r in enumerate(rows)]


@dataclass
class TheoremReport:
    max_n: int
    checked: int
    violations: list[dict]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_theorem(census: Census, minimal: Sequence[MinimalGraph], max_n: Optional[int] = None) -> TheoremReport:
    """UPC iff spanning containment of a same-order minimal graph, over all connected planar graphs."""
    max_n = census.max_n if max_n is None else max_n
    by_order: dict[int, list[UndirectedGraph]] = {}
    for h in minimal:
        by_order.setdefault(h.order, []).append(h.graph)
    checked = 0
    violations = []
    for n in range(1, max_n + 1):
        for r in census.records[n]:
            if not r.planar:
                continue
            g = r.graph
            upc = is_underlying_push_clique(g) is not None
            covered = any(contains_spanning_subgraph(g, h) for h in by_order.get(n, []))
            checked += 1
            if upc != covered or upc != r.upc:
                violations.append({"graph6": r.graph6, "upc": upc, "contains_minimal": covered})
    return TheoremReport(max_n, checked, violations)


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(census: Census, minimal: Sequence[MinimalGraph], outdir: str | Path) -> dict:
    """Write per-order graph6/digraph6 lists and ``manifest.json``; return the manifest."""
    outdir = Path(outdir)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {outdir}: {exc}") from exc
    files = []
    orders = {}
    for n in sorted(census.records):
        upc = census.upc_records(n)
        mins = [h.graph6 for h in minimal if h.order == n]
        listing = {
            f"upc_n{n}.g6": [r.graph6 for r in upc],
            f"upc_n{n}.d6": [r.witness for r in upc],
            f"minimal_n{n}.g6": mins,
        }
        for name, lines in listing.items():
            path = outdir / name
            count = write_lines(path, lines)
            files.append({"path": name, "sha256": _digest(path), "lines": count})
        orders[str(n)] = {
            "connected": len(census.records[n]),
            "planar": sum(r.planar for r in census.records[n]),
            "upc": len(upc),
            "minimal": len(mins),
        }
    manifest = {
        "orders": orders,
        "upc_total": census.upc_total,
        "minimal_total": len(minimal),
        "minimal_labels": {h.label: h.graph6 for h in minimal},
        "files": files,
    }
    path = outdir / "manifest.json"
    try:
        path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="ascii")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return manifest


def census_table(census: Census, minimal: Sequence[MinimalGraph]) -> str:
    lines = [f"{'n':>2} {'connected':>9} {'planar':>6} {'upc':>4} {'minimal':>7}"]
    for n in sorted(census.records):
        rs = census.records[n]
        mins = sum(h.order == n for h in minimal)
        lines.append(
            f"{n:>2} {len(rs):>9} {sum(r.planar for r in rs):>6} {sum(bool(r.upc) for r in rs):>4} {mins:>7}"
        )
    lines.append(f"total upc {census.upc_total}, minimal {len(minimal)}")
    return "\n".join(lines)


def record_dict(r: CensusRecord) -> dict:
    return asdict(r)


def non_planar_upcs(n: int, census: Census) -> list[str]:
    """Connected non-planar UPCs of order n (evaluated on demand; can be slow past n = 7)."""
    return [r.graph6 for r in census.records[n] if not r.planar and is_underlying_push_clique(r.graph) is not None]


__all__ = [
    "Census",
    "CensusRecord",
    "MinimalGraph",
    "TheoremReport",
    "census_planar_upc",
    "census_table",
    "connected_classes",
    "enumerate_connected",
    "is_connected",
    "minimal_list",
    "verify_theorem",
    "write_manifest",
]
