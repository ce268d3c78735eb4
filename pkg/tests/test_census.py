import json

import pytest

from pushclique.algorithms import contains_spanning_subgraph, is_connected, is_planar
from pushclique.canon import canonical_key
from pushclique.census import (
    census_planar_upc,
    census_table,
    connected_classes,
    enumerate_connected,
    minimal_list,
    verify_theorem,
    write_manifest,
)
from pushclique.formats import emit_graph6, parse_digraph6, parse_graph6
from pushclique.graph import CapacityError, UndirectedGraph
from pushclique.push import is_push_clique_oracle, is_underlying_push_clique
from oracles import brute_connected_classes, brute_upc, connected_counts_burnside

DIAMOND = UndirectedGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def key6(g):
    return canonical_key(g).decode()


def test_small_counts_match_labelled_filter():
    classes = connected_classes(4)
    for n in range(1, 5):
        assert len(classes[n]) == len(brute_connected_classes(n))


def test_counts_match_burnside_n7():
    classes = connected_classes(7)
    assert [len(classes[n]) for n in range(1, 8)] == connected_counts_burnside(7)


def test_enumeration_self_consistent():
    seen = set()
    for g in enumerate_connected(6):
        text = emit_graph6(g)
        assert is_connected(g)
        assert key6(g) == text
        assert text not in seen
        seen.add(text)
    assert len(seen) == 112


def test_capacity():
    with pytest.raises(CapacityError):
        connected_classes(9)
    with pytest.raises(CapacityError):
        census_planar_upc(0)


def test_cache_roundtrip(tmp_path):
    first = connected_classes(5, cache=tmp_path)
    assert (tmp_path / "connected_n5.g6").exists()
    assert connected_classes(5, cache=tmp_path) == first


def test_order4_list(census7):
    expected = {key6(UndirectedGraph.cycle(4)), key6(DIAMOND), key6(UndirectedGraph.complete(4))}
    assert {r.graph6 for r in census7.upc_records(4)} == expected
    for text in connected_classes(4)[4]:
        g = parse_graph6(text)
        assert brute_upc(4, g.edges()) == (text in expected)


def test_order4_minimal(census7):
    assert [r.graph6 for r in census7.minimal_records(4)] == [key6(UndirectedGraph.cycle(4))]
    c4 = UndirectedGraph.cycle(4)
    assert contains_spanning_subgraph(DIAMOND, c4)
    assert contains_spanning_subgraph(UndirectedGraph.complete(4), c4)


def test_upc_matches_brute_force_n5(census7):
    for n in range(1, 6):
        for r in census7.records[n]:
            if r.planar:
                assert r.upc == brute_upc(n, r.graph.edges()), r.graph6


def test_record_flags(census7):
    for n, recs in census7.records.items():
        for r in recs:
            assert r.order == n and r.edges == r.graph.m
            assert r.planar == is_planar(r.graph)
            if r.edge_minimal:
                assert r.upc and r.planar
            if r.upc:
                w = parse_digraph6(r.witness)
                assert w.underlying == r.graph
                assert is_push_clique_oracle(w)
            else:
                assert r.witness is None


def test_upward_closure(census7):
    upc_keys = {r.graph6 for n in census7.records for r in census7.upc_records(n)}
    for n in census7.records:
        for r in census7.upc_records(n):
            g = r.graph
            for u in range(n):
                for v in range(u + 1, n):
                    if not g.has_edge(u, v):
                        h = g.add_edge(u, v)
                        if is_planar(h):
                            assert key6(h) in upc_keys


def test_oracle_census_matches_fast_n6(census7):
    slow = census_planar_upc(6, oracle=True)
    for n in range(1, 7):
        fast = [(r.graph6, r.planar, r.upc, r.edge_minimal) for r in census7.records[n]]
        assert [(r.graph6, r.planar, r.upc, r.edge_minimal) for r in slow.records[n]] == fast


def test_minimal_list_properties(census7):
    minimal = minimal_list(census7)
    assert [h.label for h in minimal] == [f"M{i + 1}" for i in range(len(minimal))]
    assert len({h.graph6 for h in minimal}) == len(minimal)
    keys = [(h.order, h.graph.m, h.graph6) for h in minimal]
    assert keys == sorted(keys)
    for h in minimal:
        g = h.graph
        assert is_planar(g) and is_underlying_push_clique(g) is not None
        assert all(is_underlying_push_clique(g.remove_edge(u, v)) is None for u, v in g.edges())


def test_theorem_sweep_n7(census7):
    report = verify_theorem(census7, minimal_list(census7))
    assert report.ok and report.checked == sum(census7.planar_counts().values())


def test_theorem_examples(census7):
    minimal = [h.graph for h in minimal_list(census7) if h.order == 4]
    assert any(contains_spanning_subgraph(UndirectedGraph.complete(4), h) for h in minimal)
    p3_minimal = [h.graph for h in minimal_list(census7) if h.order == 3]
    assert not any(contains_spanning_subgraph(UndirectedGraph.path(3), h) for h in p3_minimal)
    assert is_underlying_push_clique(UndirectedGraph.path(3)) is None


def test_manifest(tmp_path, census7):
    small = census_planar_upc(5)
    minimal = minimal_list(small)
    a = write_manifest(small, minimal, tmp_path / "a")
    b = write_manifest(small, minimal, tmp_path / "b")
    assert a == b
    assert (tmp_path / "a" / "upc_n4.g6").read_text().count("\n") == 3
    assert json.loads((tmp_path / "a" / "manifest.json").read_text()) == a
    assert a["upc_total"] == 1 + 1 + 1 + 3 + 4
    assert {f["path"] for f in a["files"]} >= {"upc_n4.g6", "upc_n4.d6", "minimal_n4.g6"}
    assert "total upc 10" in census_table(small, minimal)


def test_manifest_io_error(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    small = census_planar_upc(3)
    with pytest.raises(OSError, match="file"):
        write_manifest(small, minimal_list(small), blocker / "sub")


def test_threads_do_not_change_output():
    assert census_planar_upc(5, threads=2).records == census_planar_upc(5, threads=1).records
