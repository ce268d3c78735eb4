"""graph6 / digraph6 encoders and decoders (short form, n <= 62).

graph6 packs the upper triangle column by column: x(0,1), x(0,2), x(1,2),
x(0,3), ... ; digraph6 packs the full adjacency matrix row-major.  Both pad
to a multiple of six bits and add 63 to every 6-bit group.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import OrientedGraph, UndirectedGraph

GRAPH6_HEADER = ">>graph6<<"
DIGRAPH6_HEADER = ">>digraph6<<"


class FormatError(ValueError):
    pass


class DigonError(FormatError):
    """The digraph6 input has opposite arcs, so it is not an oriented graph."""


def _pack(bitlist: list[int]) -> str:
    bitlist = bitlist + [0] * (-len(bitlist) % 6)
    chars = []
    for i in range(0, len(bitlist), 6):
        value = 0
        for b in bitlist[i:i + 6]:
            value = value << 1 | b
        chars.append(chr(63 + value))
    return "".join(chars)


def _unpack(body: str, count: int) -> list[int]:
    if len(body) != (count + 5) // 6:
        raise FormatError(f"expected {(count + 5) // 6} data bytes, got {len(body)}")
    out = []
    for ch in body:
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise FormatError(f"byte {ch!r} outside 63..126")
        out.extend(value >> k & 1 for k in range(5, -1, -1))
    if any(out[count:]):
        raise FormatError("non-zero padding bits")
    return out[:count]


def _order(ch: str) -> int:
    n = ord(ch) - 63
    if not 0 <= n <= 62:
        raise FormatError(f"size byte {ch!r} outside the short form")
    if n == 0:
        raise FormatError("empty graph (n = 0) is not supported")
    return n


def emit_graph6(g: UndirectedGraph) -> str:
    bitlist = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    return chr(63 + g.n) + _pack(bitlist)


def parse_graph6(text: str) -> UndirectedGraph:
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise FormatError("empty graph6 string")
    n = _order(text[0])
    bitlist = _unpack(text[1:], n * (n - 1) // 2)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitlist[k]:
                edges.append((i, j))
            k += 1
    return UndirectedGraph.from_edges(n, edges)


def emit_digraph6(d: OrientedGraph) -> str:
    bitlist = [d.out[i] >> j & 1 for i in range(d.n) for j in range(d.n)]
    return "&" + chr(63 + d.n) + _pack(bitlist)


def parse_digraph6(text: str) -> OrientedGraph:
    text = text.strip()
    if text.startswith(DIGRAPH6_HEADER):
        text = text[len(DIGRAPH6_HEADER):]
    if not text.startswith("&"):
        raise FormatError("digraph6 string must start with '&'")
    if len(text) < 2:
        raise FormatError("truncated digraph6 string")
    n = _order(text[1])
    bitlist = _unpack(text[2:], n * n)
    arcs = []
    for i in range(n):
        for j in range(n):
            if bitlist[i * n + j]:
                if i == j:
                    raise FormatError(f"loop at vertex {i}")
                if j < i and bitlist[j * n + i]:
                    raise DigonError(f"opposite arcs between {j} and {i}")
                arcs.append((i, j))
    return OrientedGraph.from_arcs(n, arcs)


def read_graph6_file(path: str | Path) -> list[UndirectedGraph]:
    with open(path, encoding="ascii") as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def iter_lines(graphs: Iterable[str]) -> Iterator[str]:
    for s in graphs:
        yield s + "\n"


def write_lines(path: str | Path, lines: Iterable[str]) -> int:
    """Write one string per LF-terminated line; return the line count."""
    lines = list(lines)
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.writelines(iter_lines(lines))
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return len(lines)
