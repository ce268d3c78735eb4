import random

import networkx as nx
import pytest
from hypothesis import given

from pushclique.formats import (
    DigonError,
    FormatError,
    emit_digraph6,
    emit_graph6,
    parse_digraph6,
    parse_graph6,
    read_graph6_file,
    write_lines,
)
from pushclique.graph import CapacityError, OrientedGraph, UndirectedGraph, VertexSet
from strategies import graphs, orientations


def nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_k1():
    g = parse_graph6("@")
    assert (g.n, g.m) == (1, 0)
    assert emit_graph6(g) == "@" == nx_graph6(g)


def test_k4():
    assert parse_graph6("C~") == UndirectedGraph.complete(4)
    assert nx_graph6(UndirectedGraph.complete(4)) == "C~"


def test_c4():
    c4 = UndirectedGraph.cycle(4)
    assert parse_graph6("Cl") == c4
    assert emit_graph6(c4) == "Cl" == nx_graph6(c4)


def test_header_is_stripped():
    assert parse_graph6(">>graph6<<Cl") == UndirectedGraph.cycle(4)
    d = OrientedGraph.from_arcs(2, [(0, 1)])
    assert parse_digraph6(">>digraph6<<" + emit_digraph6(d)) == d


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f", "C>", "Cl?", "?", "~"])
def test_malformed_graph6(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


def test_padding_bits_must_be_zero():
    # n=2 uses 1 data bit; 'A' + chr(63+1) sets a padding bit
    with pytest.raises(FormatError):
        parse_graph6("A" + chr(63 + 1))


def test_single_arc_digraph6():
    text = emit_digraph6(OrientedGraph.from_arcs(2, [(0, 1)]))
    # bits row-major: x00 x01 x10 x11 = 0100, padded to 010000
    assert text == "&A" + chr(63 + 0b010000)


def test_triangle_roundtrip():
    d = OrientedGraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert parse_digraph6(emit_digraph6(d)) == d


def test_digon_rejected():
    text = "&A" + chr(63 + 0b011000)
    with pytest.raises(DigonError):
        parse_digraph6(text)


def test_loop_rejected():
    with pytest.raises(FormatError):
        parse_digraph6("&A" + chr(63 + 0b100000))


def test_digraph6_needs_ampersand():
    with pytest.raises(FormatError):
        parse_digraph6("Cl")


@pytest.mark.parametrize("n", range(1, 11))
def test_graph6_roundtrip_random(n):
    rng = random.Random(n)
    slots = [(i, j) for j in range(1, n) for i in range(j)]
    for _ in range(1000):
        g = UndirectedGraph.from_edges(n, [e for e in slots if rng.random() < 0.5])
        text = emit_graph6(g)
        assert parse_graph6(text) == g
        assert emit_graph6(parse_graph6(text)) == text
    assert text == nx_graph6(g)


@pytest.mark.parametrize("n", range(1, 11))
def test_digraph6_roundtrip_random(n):
    rng = random.Random(100 + n)
    slots = [(i, j) for j in range(1, n) for i in range(j)]
    for _ in range(1000):
        arcs = [(a, b) if rng.random() < 0.5 else (b, a) for a, b in slots if rng.random() < 0.5]
        d = OrientedGraph.from_arcs(n, arcs)
        text = emit_digraph6(d)
        assert parse_digraph6(text) == d
        assert emit_digraph6(parse_digraph6(text)) == text


@given(graphs(max_n=12))
def test_graph6_roundtrip_property(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(orientations(max_n=12))
def test_digraph6_roundtrip_property(d):
    assert parse_digraph6(emit_digraph6(d)) == d


def test_file_roundtrip(tmp_path):
    gs = [UndirectedGraph.cycle(4), UndirectedGraph.complete(5), UndirectedGraph.path(3)]
    path = tmp_path / "a.g6"
    assert write_lines(path, [emit_graph6(g) for g in gs]) == 3
    assert path.read_bytes().endswith(b"\n")
    assert read_graph6_file(path) == gs


def test_write_error_names_path(tmp_path):
    target = tmp_path / "missing" / "x.g6"
    with pytest.raises(OSError, match="missing"):
        write_lines(target, ["@"])


def test_capacity():
    with pytest.raises(CapacityError):
        UndirectedGraph.empty(17)
    with pytest.raises(CapacityError):
        UndirectedGraph.empty(0)


def test_graph_invariants():
    with pytest.raises(ValueError):
        UndirectedGraph(2, (0b10, 0))
    with pytest.raises(ValueError):
        UndirectedGraph.from_edges(3, [(1, 1)])
    g = UndirectedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert g.m == sum(g.degrees()) // 2 == 6


def test_oriented_needs_one_arc_per_edge():
    g = UndirectedGraph.path(3)
    with pytest.raises(ValueError):
        OrientedGraph(g, (0b10, 0, 0))
    with pytest.raises(ValueError):
        OrientedGraph(g, (0b110, 0b101, 0))


def test_vertex_set():
    s = VertexSet.of(5, [0, 3])
    assert 3 in s and 1 not in s and len(s) == 2
    assert list(s.complement()) == [1, 2, 4]
    with pytest.raises(ValueError):
        VertexSet(1 << 5, 5)


@given(graphs(max_n=8))
def test_relabel_preserves_edge_count(g):
    perm = list(range(g.n))[::-1]
    h = g.relabel(perm)
    assert h.m == g.m
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
