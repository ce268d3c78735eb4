"""Why the order-7 count comes out 13/4 rather than 14/3.

Every graph quoted as containing H12 (except one) contains
Y = C7 + {m0, m2, m4} + {s4, s6}. Y is planar and reach-complete but not an
underlying push clique; counting it as one gives 14 order-7 graphs, and
with it as the third minimal graph the order-7 minimal list collapses to 3.
"""
from pushclique.algorithms import common_neighbors, contains_spanning_subgraph, contains_subgraph, is_planar
from pushclique.canon import canonical_key, canonical_graph
from pushclique.lemma import H12_CANDIDATE, IMPLICATIONS, ChordConfig, order7_minimal, valid_completions
from pushclique.push import is_push_clique_oracle, is_reach_complete, is_underlying_push_clique, orientation_class_reps


def main() -> None:
    minimal7 = order7_minimal()
    y = ChordConfig.of(*H12_CANDIDATE).graph()
    print(f"Y = C7+{ChordConfig.of(*H12_CANDIDATE).label()}: m={y.m} key={canonical_key(y).decode()}")
    print(f"  planar={is_planar(y)} reach-complete={is_reach_complete(y)}")
    fast = is_underlying_push_clique(y) is not None
    slow = any(is_push_clique_oracle(d) for d in orientation_class_reps(y))
    print(f"  underlying push clique: fast={fast} oracle={slow}")

    print("\nquoted containments of H12 against Y:")
    for cid, label, med, sh in IMPLICATIONS:
        if label == "H12":
            g = ChordConfig.of(med, sh).graph()
            print(f"  {cid:12} C7+{ChordConfig.of(med, sh).label():24} contains Y: {contains_subgraph(g, y)}")

    x = ChordConfig.of([0, 4, 2], [2, 6]).graph()
    print(f"\nC7+{{m0,m2,m4,s2,s6}}: reach-complete={is_reach_complete(x)}, "
          f"common neighbours of a3, a6 = {common_neighbors(x, 3, 6)}")
    mins = valid_completions([0, 4, 2]).minimal
    print("minimal valid completions of {m0,m2,m4}:", [sorted(s) for s in mins])
    s16 = ChordConfig.of([0, 4, 2], [1, 6]).graph()
    print(f"  {{s1,s6}} isomorphic to Y: {canonical_graph(s16) == canonical_graph(y)}")

    print("\norder-7 minimal graphs containing Y:")
    for h in minimal7:
        print(f"  {h.label} {h.graph6} m={h.graph.m}: {contains_spanning_subgraph(h.graph, y)}")


if __name__ == "__main__":
    main()
