"""Mechanised replay of the seven-vertex case analysis.

Vertices of the Hamiltonian cycle are a_0..a_6 with cycle edges a_i a_{i+1};
the short chord s_i joins a_i and a_{i+2}, the medium chord m_i joins a_i and
a_{i+3} (indices mod 7).  Every claim made in the case analysis is evaluated
and tagged as either definition-independent (must hold outright) or
dependent on the reading of "reach-complete" (recorded per mode).
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

from .algorithms import (
    K33,
    contains_spanning_subgraph,
    contains_subgraph,
    dominating_vertices,
    has_minor,
    hamiltonian_cycles,
    is_hamiltonian_cycle,
)
from .canon import automorphisms
from .census import Census, MinimalGraph, census_planar_upc, minimal_list
from .graph import UndirectedGraph
from .push import ReachMode, is_reach_complete, is_underlying_push_clique

N = 7
INDEPENDENT = "independent"
DEFINITION = "definition"
SOUNDNESS = "soundness"
DIAGNOSTIC = "diagnostic"


class ConventionError(RuntimeError):
    """The chord indexing disagrees with an incidence fact used by the proof."""


def short(i: int) -> tuple[int, int]:
    return tuple(sorted((i % N, (i + 2) % N)))


def medium(i: int) -> tuple[int, int]:
    return tuple(sorted((i % N, (i + 3) % N)))


def chord_name(edge: Sequence[int]) -> str:
    a, b = edge
    for i in range(N):
        if short(i) == tuple(sorted((a, b))):
            return f"s{i}"
        if medium(i) == tuple(sorted((a, b))):
            return f"m{i}"
    raise ValueError(f"{edge} is not a chord of C7")


def names(prefix: str, idx: Iterable[int]) -> list[str]:
    return [f"{prefix}{i}" for i in sorted(idx)]


@dataclass(frozen=True)
class ChordConfig:
    medium: frozenset[int] = frozenset()
    short: frozenset[int] = frozenset()

    @classmethod
    def of(cls, medium: Iterable[int] = (), short: Iterable[int] = ()) -> "ChordConfig":
        return cls(frozenset(medium), frozenset(short))

    def graph(self) -> UndirectedGraph:
        return config_to_graph(self)

    def label(self) -> str:
        return "{" + ",".join(names("m", self.medium) + names("s", self.short)) + "}"


def config_to_graph(c: ChordConfig) -> UndirectedGraph:
    edges = [(i, (i + 1) % N) for i in range(N)]
    edges += [medium(i) for i in c.medium] + [short(i) for i in c.short]
    return UndirectedGraph.from_edges(N, edges)


@dataclass(frozen=True)
class ChordClass:
    cycle: tuple[int, ...]
    short: tuple[tuple[int, int], ...]
    medium: tuple[tuple[int, int], ...]


def classify_chords(g: UndirectedGraph, cycle: Sequence[int]) -> ChordClass:
    """Label every non-cycle edge by its cyclic distance along ``cycle``."""
    if not is_hamiltonian_cycle(g, cycle):
        raise ValueError(f"{tuple(cycle)} is not a Hamiltonian cycle of the graph")
    n = g.n
    pos = {v: i for i, v in enumerate(cycle)}
    shorts, mediums = [], []
    for u, v in g.edges():
        d = abs(pos[u] - pos[v])
        d = min(d, n - d)
        if d == 2:
            shorts.append((u, v))
        elif d == 3:
            mediums.append((u, v))
        elif d != 1:
            raise ValueError(f"chord {u}{v} at distance {d}; only order 7 is supported")
    return ChordClass(tuple(cycle), tuple(shorts), tuple(mediums))


def max_medium_chords(g: UndirectedGraph) -> tuple[int, Optional[tuple[int, ...]]]:
    best, arg = -1, None
    for cyc in hamiltonian_cycles(g):
        k = len(classify_chords(g, cyc).medium)
        if k > best:
            best, arg = k, cyc
    return best, arg


# -- dihedral symmetry ------------------------------------------------------

def dihedral() -> list[tuple[int, ...]]:
    """The 14 symmetries of C7 as vertex permutations."""
    rots = [tuple((i + k) % N for i in range(N)) for k in range(N)]
    refl = [tuple((k - i) % N for i in range(N)) for k in range(N)]
    return rots + refl


def _image_index(perm: Sequence[int], edge: Sequence[int], kind: str) -> int:
    name = chord_name((perm[edge[0]], perm[edge[1]]))
    assert name[0] == kind
    return int(name[1:])


def act_medium(perm: Sequence[int], chords: Iterable[int]) -> frozenset[int]:
    return frozenset(_image_index(perm, medium(i), "m") for i in chords)


def act_short(perm: Sequence[int], chords: Iterable[int]) -> frozenset[int]:
    return frozenset(_image_index(perm, short(i), "s") for i in chords)


def medium_orbit(chords: Iterable[int]) -> frozenset[frozenset[int]]:
    chords = frozenset(chords)
    return frozenset(act_medium(p, chords) for p in dihedral())


def wlog_orbits(k: int) -> list[frozenset[int]]:
    """Representatives (lexicographically least) of k-subsets of medium chords under D7."""
    if not 0 <= k <= N:
        raise ValueError("k must lie in 0..7")
    reps = set()
    for combo in itertools.combinations(range(N), k):
        reps.add(min(tuple(sorted(s)) for s in medium_orbit(combo)))
    return [frozenset(r) for r in sorted(reps)]


def config_symmetry(c: ChordConfig, src: int, dst: int) -> Optional[tuple[tuple[int, ...], str]]:
    """A symmetry of the partial graph ``c`` sending short chord s_src to s_dst.

    Dihedral maps are tried first since they keep the cycle labelling; any
    graph automorphism is accepted as a fallback.
    """
    for p in dihedral():
        if act_medium(p, c.medium) == c.medium and act_short(p, c.short) == c.short:
            if act_short(p, [src]) == {dst}:
                return p, "dihedral"
    g = c.graph()
    a, b = short(src)
    target = set(short(dst))
    for p in automorphisms(g):
        if {p[a], p[b]} == target:
            return p, "automorphism"
    return None


# -- completions ------------------------------------------------------------

def satisfies_constraints(g: UndirectedGraph, mode: ReachMode | str) -> bool:
    """Reach-complete, minimum degree 3, no dominating vertex, no K5 or K3,3 minor."""
    return (
        is_reach_complete(g, mode)
        and min(g.degrees()) >= 3
        and not dominating_vertices(g)
        and not has_minor(g, "K5")
        and not has_minor(g, "K33")
    )


@dataclass
class Completions:
    all: list[frozenset[int]]
    minimal: list[frozenset[int]]


def _inclusion_minimal(sets: list[frozenset[int]]) -> list[frozenset[int]]:
    return [s for s in sets if not any(t < s for t in sets)]


def _sort_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def valid_completions(
    medium_set: Iterable[int], mode: ReachMode | str = ReachMode.TWO_COMMON_NEIGHBORS, mandatory: Iterable[int] = ()
) -> Completions:
    """All short-chord sets containing ``mandatory`` that satisfy the search constraints."""
    medium_set = frozenset(medium_set)
    mandatory = frozenset(mandatory)
    found = []
    for mask in range(1 << N):
        s = frozenset(i for i in range(N) if mask >> i & 1)
        if mandatory <= s and satisfies_constraints(ChordConfig(medium_set, s).graph(), mode):
            found.append(s)
    found = _sort_sets(found)
    return Completions(found, _inclusion_minimal(found))


def reach_completions(medium_set: Iterable[int], mode: ReachMode | str) -> list[frozenset[int]]:
    """Short-chord sets that make the configuration reach-complete (no other constraint)."""
    medium_set = frozenset(medium_set)
    out = []
    for mask in range(1 << N):
        s = frozenset(i for i in range(N) if mask >> i & 1)
        if is_reach_complete(ChordConfig(medium_set, s).graph(), mode):
            out.append(s)
    return _sort_sets(out)


# -- reports ----------------------------------------------------------------

@dataclass
class Claim:
    id: str
    statement: str
    kind: str
    holds: bool
    detail: dict = field(default_factory=dict)


@dataclass
class CaseReport:
    case: str
    constraints: dict
    mode: str
    expected: Optional[list] = None
    found: Optional[list] = None
    witnesses: dict = field(default_factory=dict)
    claims: list[Claim] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if any(not c.holds for c in self.claims if c.kind in (INDEPENDENT, SOUNDNESS)):
            return "discrepancy"
        if any(not c.holds for c in self.claims if c.kind == DEFINITION):
            return "confirmed-with-definition-caveat"
        return "confirmed"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        return d

    def failing(self, kinds: Sequence[str] = (INDEPENDENT, SOUNDNESS)) -> list[Claim]:
        return [c for c in self.claims if not c.holds and c.kind in kinds]


def _sets_as_names(sets: Iterable[Iterable[int]]) -> list[list[str]]:
    return [names("s", s) for s in sets]


def check_conventions() -> list[Claim]:
    """Incidence facts quoted by the proof, checked against the chord indexing."""
    claims = []
    g = ChordConfig.of([0, 1, 4, 5]).graph()
    four = {tuple(sorted(e)) for e in [(1, 6), (4, 6), (0, 2), (4, 2)]}
    claims.append(Claim(
        "anchor-m4-degrees",
        "with m0,m1,m4,m5: d(a2) = d(a6) = 2 and {a1a6,a4a6,a0a2,a4a2} are s6,s4,s0,s2",
        INDEPENDENT,
        g.degree(2) == 2 and g.degree(6) == 2 and four == {short(i) for i in (6, 4, 0, 2)},
    ))
    g = ChordConfig.of([0, 2, 4, 6]).graph()
    low = [v for v in range(N) if g.degree(v) == 2]
    at_a1 = {i for i in range(N) if 1 in short(i)}
    claims.append(Claim(
        "anchor-m4-alternating",
        "with m0,m2,m4,m6: only a1 has degree 2 and its short chords are s1, s6",
        INDEPENDENT,
        low == [1] and at_a1 == {1, 6},
        {"degree_two": low, "short_at_a1": sorted(at_a1)},
    ))
    claims.append(Claim(
        "anchor-reach",
        "s2 joins a2,a4 and s4 joins a4,a6",
        INDEPENDENT,
        short(2) == (2, 4) and short(4) == (4, 6),
    ))
    claims.append(Claim(
        "anchor-incident",
        "m0 and m4 share a0",
        INDEPENDENT,
        set(medium(0)) & set(medium(4)) == {0},
    ))
    return claims


# containment conclusions drawn in the case analysis: (claim id, label, medium set, short set)
IMPLICATIONS = [
    ("m2-m1-i", "H12", (0, 1), (0, 2, 3, 6)),
    ("m2-m1-ii", "H11", (0, 1), (0, 2, 4, 5)),
    ("m2-m1-iii", "H12", (0, 1), (0, 3, 5, 6)),
    ("m3-m2-i", "H12", (0, 4, 2), (2, 6)),
    ("m3-m2-ii", "H12", (0, 4, 2), (4, 6)),
    ("m3-m5-i", "H10", (0, 4, 5), (0, 3, 6)),
    ("m3-m5-ii", "H11", (0, 4, 5), (1, 2, 4, 6)),
    ("m4-alt-s1", "H12", (0, 2, 4, 6), (6, 1)),
    ("m4-alt-s4", "H12", (0, 2, 4, 6), (6, 4)),
    ("m4-alt-s2", "H10", (0, 2, 4, 6), (6, 2)),
]
H_LABELS = ("H10", "H11", "H12")
H12_CANDIDATE = ((0, 2, 4), (4, 6))


@dataclass
class HIdentification:
    contained: dict[str, list[str]]
    assignment: dict[str, str]
    satisfied: int
    total: int
    optimal_assignments: int

    @property
    def consistent(self) -> bool:
        return self.satisfied == self.total


def identify_h_labels(minimal7: Sequence[MinimalGraph]) -> HIdentification:
    """Match H10, H11, H12 to order-7 minimal graphs, maximising the quoted containments."""
    contained = {}
    for cid, _, med, sh in IMPLICATIONS:
        g = ChordConfig.of(med, sh).graph()
        contained[cid] = [h.label for h in minimal7 if contains_subgraph(g, h.graph)]
    labels = [h.label for h in minimal7]
    best, best_assign, ties = -1, {}, 0
    for choice in itertools.permutations(labels, min(len(H_LABELS), len(labels))):
        assign = dict(zip(H_LABELS, choice))
        score = sum(assign.get(lab) in contained[cid] for cid, lab, _, _ in IMPLICATIONS)
        if score > best:
            best, best_assign, ties = score, assign, 1
        elif score == best:
            ties += 1
    return HIdentification(contained, best_assign, best, len(IMPLICATIONS), ties)


class Replay:
    """Evaluate every claim of the case analysis under one reach-complete reading."""

    def __init__(self, minimal7: Sequence[MinimalGraph], mode: ReachMode | str = ReachMode.TWO_COMMON_NEIGHBORS):
        self.mode = ReachMode(mode)
        self.minimal7 = list(minimal7)
        self.ident = identify_h_labels(self.minimal7)
        self._by_label = {h.label: h.graph for h in self.minimal7}

    def _h(self, label: str) -> Optional[UndirectedGraph]:
        m = self.ident.assignment.get(label)
        return self._by_label.get(m) if m else None

    def _report(self, case: str, medium_set: Iterable[int] = (), **constraints) -> CaseReport:
        cons = {"medium": names("m", medium_set), **constraints}
        return CaseReport(case, cons, self.mode.value)

    def _implication(self, cid: str) -> Claim:
        _, label, med, sh = next(x for x in IMPLICATIONS if x[0] == cid)
        g = ChordConfig.of(med, sh).graph()
        h = self._h(label)
        sub = h is not None and contains_subgraph(g, h)
        span = h is not None and contains_spanning_subgraph(g, h)
        return Claim(
            f"implies-{cid}",
            f"C7+{ChordConfig.of(med, sh).label()} contains {label}",
            INDEPENDENT,
            sub,
            {
                "label": label,
                "identified_as": self.ident.assignment.get(label),
                "subgraph": sub,
                "spanning": span,
                "edges": g.m,
                "contains_any_minimal": self.ident.contained[cid],
                "is_upc": is_underlying_push_clique(g) is not None,
            },
        )

    def _minimal_claim(self, cid: str, statement: str, medium_set, expected, mandatory=()) -> tuple[Claim, Completions]:
        comp = valid_completions(medium_set, self.mode, mandatory)
        want = sorted(sorted(s) for s in expected)
        got = sorted(sorted(s) for s in comp.minimal)
        return Claim(cid, statement, DEFINITION, got == want,
                     {"expected": _sets_as_names(want), "found": _sets_as_names(got)}), comp

    def _cycle_claim(self, cid: str, c: ChordConfig, cycle, expected_medium) -> Claim:
        g = c.graph()
        want = sorted(tuple(sorted(e)) for e in expected_medium)
        try:
            got = sorted(tuple(sorted(e)) for e in classify_chords(g, cycle).medium)
        except ValueError as exc:
            return Claim(cid, f"cycle {cycle} in C7+{c.label()}", INDEPENDENT, False, {"error": str(exc)})
        return Claim(
            cid,
            "cycle " + "".join(f"a{v}" for v in cycle) + f"a{cycle[0]} in C7+{c.label()} has medium chords {want}",
            INDEPENDENT,
            got == want,
            {"found": got},
        )

    def _reduction_claim(self, cid: str, medium_set, at_least: int, comp: Completions) -> Claim:
        bad = []
        for s in comp.all:
            k, _ = max_medium_chords(ChordConfig(frozenset(medium_set), s).graph())
            if k < at_least:
                bad.append(names("s", s))
        return Claim(cid, f"every valid completion has a Hamiltonian cycle with >= {at_least} medium chords",
                     DEFINITION, not bad, {"counterexamples": bad, "completions": len(comp.all)})

    # -- individual cases --------------------------------------------------

    def case_conventions(self) -> CaseReport:
        r = self._report("conventions")
        r.claims = check_conventions()
        return r

    def case_identification(self) -> CaseReport:
        r = self._report("h-identification")
        ident = self.ident
        r.found = [ident.assignment]
        r.witnesses = {"contained": ident.contained, "optimal_assignments": ident.optimal_assignments,
                       "minimal_order7": {h.label: h.graph6 for h in self.minimal7}}
        r.claims.append(Claim("order7-minimal-count", "exactly three order-7 minimal graphs (H10, H11, H12)",
                              INDEPENDENT, len(self.minimal7) == 3, {"found": len(self.minimal7)}))
        r.claims.append(Claim("labels-consistent", "one labelling satisfies every quoted containment",
                              INDEPENDENT, ident.consistent,
                              {"satisfied": ident.satisfied, "total": ident.total}))
        # the smallest graph quoted as containing H12 bounds H12 from above
        y = ChordConfig.of(*H12_CANDIDATE).graph()
        inside = {cid: contains_subgraph(ChordConfig.of(med, sh).graph(), y) for cid, _, med, sh in IMPLICATIONS}
        r.claims.append(Claim(
            "h12-candidate-upc",
            f"C7+{ChordConfig.of(*H12_CANDIDATE).label()}, which lies inside the graphs quoted as containing H12, "
            "is an underlying push clique",
            DIAGNOSTIC,
            is_underlying_push_clique(y) is not None,
            {"edges": y.m, "contained_in": inside,
             "inside_minimal": [h.label for h in self.minimal7 if contains_subgraph(h.graph, y)]},
        ))
        return r

    def case_m0(self) -> CaseReport:
        r = self._report("m=0")
        reach = reach_completions([], self.mode)
        full = frozenset(range(N))
        r.expected = [names("s", full)]
        r.found = _sets_as_names(reach)
        r.claims.append(Claim("m0-all-shorts", "only the full short set makes C7 reach-complete",
                              DEFINITION, reach == [full], {"found": r.found}))
        r.claims.append(Claim("m0-k5", "C7 plus all short chords has a K5 minor",
                              INDEPENDENT, has_minor(ChordConfig.of([], full).graph(), "K5")))
        comp = valid_completions([], self.mode)
        r.claims.append(Claim("m0-none", "no valid completion with m = 0", DEFINITION, not comp.all,
                              {"found": _sets_as_names(comp.all)}))
        return r

    def case_m1(self) -> CaseReport:
        r = self._report("m=1", [0])
        r.claims.append(Claim("m1-wlog", "all single medium chords are equivalent (one orbit)",
                              INDEPENDENT, wlog_orbits(1) == [frozenset({0})]))
        reach = reach_completions([0], self.mode)
        r.claims.append(Claim("m1-needs-s2-s6", "every reach-completing short set contains s2 and s6",
                              DEFINITION, bool(reach) and all({2, 6} <= s for s in reach),
                              {"reach_completions": len(reach)}))
        part = ChordConfig.of([0], [2, 6])
        g = part.graph()
        at_a5 = sorted(i for i in range(N) if 5 in short(i))
        r.claims.append(Claim("m1-deg-a5", "d(a5) = 2 in C7+{m0,s2,s6}; its short chords are s3, s5",
                              INDEPENDENT, g.degree(5) == 2 and at_a5 == [3, 5]))
        sym = config_symmetry(part, 3, 5)
        r.claims.append(Claim("m1-wlog-s5", "adding s3 or s5 is symmetric in C7+{m0,s2,s6}",
                              INDEPENDENT, sym is not None,
                              {"map": sym[0] if sym else None, "via": sym[1] if sym else None}))
        r.claims.append(self._cycle_claim("m1-cycle", ChordConfig.of([0], [2, 5, 6]),
                                          (0, 3, 4, 2, 1, 6, 5), [(0, 1), (4, 5)]))
        comp = valid_completions([0], self.mode)
        r.found = _sets_as_names(comp.minimal)
        r.claims.append(self._reduction_claim("m1-reduces", [0], 2, comp))
        return r

    def case_m2_orbits(self) -> CaseReport:
        r = self._report("m=2/orbits")
        orbits = wlog_orbits(2)
        stated = [frozenset(s) for s in ({0, 4}, {0, 5}, {0, 1})]
        covered = set().union(*(medium_orbit(s) for s in stated))
        r.expected = [names("m", s) for s in stated]
        r.found = [names("m", s) for s in orbits]
        r.claims.append(Claim("m2-three-orbits", "exactly three two-chord configurations up to symmetry",
                              INDEPENDENT, len(orbits) == 3 and len({medium_orbit(s) for s in stated}) == 3
                              and covered == {frozenset(c) for c in itertools.combinations(range(N), 2)}))
        return r

    def case_none(self, case: str, medium_set, claim_id: str) -> CaseReport:
        r = self._report(case, medium_set)
        comp = valid_completions(medium_set, self.mode)
        r.expected = []
        r.found = _sets_as_names(comp.minimal)
        r.claims.append(Claim(claim_id, "no valid completion by short chords", DEFINITION, not comp.all,
                              {"found": r.found}))
        return r

    def case_m2_m5(self) -> CaseReport:
        r = self._report("m=2/{m0,m5}", [0, 5])
        reach = reach_completions([0, 5], self.mode)
        r.claims.append(Claim("m2-m5-needs-s2-s4", "every reach-completing short set contains s2 and s4",
                              DEFINITION, bool(reach) and all({2, 4} <= s for s in reach),
                              {"reach_completions": len(reach)}))
        r.claims.append(self._cycle_claim("m2-m5-cycle", ChordConfig.of([0, 5], [2, 4]),
                                          (0, 3, 4, 2, 1, 5, 6), [(0, 1), (4, 5), (4, 6)]))
        comp = valid_completions([0, 5], self.mode)
        r.found = _sets_as_names(comp.minimal)
        r.claims.append(self._reduction_claim("m2-m5-reduces", [0, 5], 3, comp))
        return r

    def case_m2_m1(self) -> CaseReport:
        r = self._report("m=2/{m0,m1}", [0, 1], mandatory=["s0"])
        base = ChordConfig.of([0, 1])
        g = base.graph()
        r.claims.append(Claim("m2-m1-deg-a2", "d(a2) = 2 and its short chords are s0, s2", INDEPENDENT,
                              g.degree(2) == 2 and sorted(i for i in range(N) if 2 in short(i)) == [0, 2]))
        stated = (4, 3, 2, 1, 0, 6, 5)  # a0<->a4, a1<->a3, a5<->a6
        ok = (act_medium(stated, base.medium) == base.medium and act_short(stated, [0]) == {2}
              and stated in automorphisms(g))
        r.claims.append(Claim("m2-m1-wlog-s0", "a0<->a4, a1<->a3, a5<->a6 fixes the configuration and swaps s0, s2",
                              INDEPENDENT, ok))
        expected = [{0, 2, 3, 6}, {0, 2, 4, 5}, {0, 3, 5, 6}]
        claim, comp = self._minimal_claim("m2-m1-three-ways", "exactly three minimal completions",
                                          [0, 1], expected, mandatory=[0])
        r.expected, r.found = claim.detail["expected"], claim.detail["found"]
        r.claims.append(claim)
        for cid in ("m2-m1-i", "m2-m1-ii", "m2-m1-iii"):
            r.claims.append(self._implication(cid))
        return r

    def case_m3_nonincident(self) -> CaseReport:
        r = self._report("m=3/non-incident")
        triples = [t for t in itertools.combinations(range(N), 3)
                   if all(not set(medium(a)) & set(medium(b)) for a, b in itertools.combinations(t, 2))]
        bad = [names("m", t) for t in triples if not has_minor(ChordConfig.of(t).graph(), "K33")]
        r.found = [names("m", t) for t in triples]
        r.claims.append(Claim("m3-nonincident-k33", "three pairwise non-incident medium chords give a K3,3 minor",
                              INDEPENDENT, bool(triples) and not bad, {"triples": len(triples), "failing": bad}))
        return r

    def _coverage(self, k: int, stated: list[set[int]], excluded) -> tuple[bool, dict]:
        universe = {frozenset(c) for c in itertools.combinations(range(N), k) if not excluded(c)}
        covered = set().union(*(medium_orbit(s) for s in stated))
        orbits = {medium_orbit(s) for s in universe}
        return covered == universe, {"orbits": len(orbits), "stated": len(stated),
                                     "uncovered": [names("m", s) for s in sorted(universe - covered, key=sorted)]}

    @staticmethod
    def _has_nonincident_triple(c) -> bool:
        return any(all(not set(medium(a)) & set(medium(b)) for a, b in itertools.combinations(t, 2))
                   for t in itertools.combinations(c, 3))

    def case_m3_coverage(self) -> CaseReport:
        r = self._report("m=3/coverage")
        stated = [{0, 4, 1}, {0, 4, 2}, {0, 4, 5}]
        ok, detail = self._coverage(3, stated, self._has_nonincident_triple)
        r.expected = [names("m", s) for s in stated]
        r.claims.append(Claim("m3-coverage", "subcases m1, m2, m5 after m0, m4 cover every other triple",
                              INDEPENDENT, ok, detail))
        return r

    def case_m3_m2(self) -> CaseReport:
        r = self._report("m=3/{m0,m4,m2}", [0, 4, 2])
        claim, _ = self._minimal_claim("m3-m2-two-ways", "exactly two minimal completions",
                                       [0, 4, 2], [{2, 6}, {4, 6}])
        r.expected, r.found = claim.detail["expected"], claim.detail["found"]
        r.claims.append(claim)
        for cid in ("m3-m2-i", "m3-m2-ii"):
            r.claims.append(self._implication(cid))
        return r

    def case_m3_m5(self) -> CaseReport:
        r = self._report("m=3/{m0,m4,m5}", [0, 4, 5])
        claim, _ = self._minimal_claim("m3-m5-two-ways", "exactly two minimal completions",
                                       [0, 4, 5], [{0, 3, 6}, {1, 2, 4, 6}])
        r.expected, r.found = claim.detail["expected"], claim.detail["found"]
        r.claims.append(claim)
        for cid in ("m3-m5-i", "m3-m5-ii"):
            r.claims.append(self._implication(cid))
        return r

    def case_m4_coverage(self) -> CaseReport:
        r = self._report("m=4/coverage")
        stated = [{0, 1, 4, 5}, {0, 1, 3, 4}, {0, 2, 4, 6}]
        ok, detail = self._coverage(4, stated, self._has_nonincident_triple)
        r.expected = [names("m", s) for s in stated]
        r.claims.append(Claim("m4-coverage", "the three stated quadruples cover every quadruple "
                              "without a non-incident triple", INDEPENDENT, ok, detail))
        return r

    def case_m4_a(self) -> CaseReport:
        med = [0, 1, 4, 5]
        r = self._report("m=4/{m0,m1,m4,m5}", med)
        pool = [6, 4, 0, 2]
        matchings = [{a, b} for a, b in itertools.combinations(pool, 2) if not set(short(a)) & set(short(b))]
        reach = [s for s in reach_completions(med, self.mode)
                 if min(ChordConfig(frozenset(med), s).graph().degrees()) >= 3
                 and not dominating_vertices(ChordConfig(frozenset(med), s).graph())]
        r.claims.append(Claim("m4-a-matching", "degree and reach constraints force a 2-matching from {s6,s4,s0,s2}",
                              DEFINITION, all(any(mt <= s for mt in matchings) for s in reach),
                              {"matchings": _sets_as_names(matchings), "candidates": len(reach)}))
        g = ChordConfig.of(med, [0, 5]).graph()
        r.claims.append(Claim("m4-a-s5", "with s0, adding s5 makes a0 dominating", INDEPENDENT,
                              0 in dominating_vertices(g)))
        g = ChordConfig.of(med, [6, 1]).graph()
        r.claims.append(Claim("m4-a-s1", "with s6, adding s1 makes a1 dominating", INDEPENDENT,
                              1 in dominating_vertices(g)))
        forced = [s for s in reach_completions(med, self.mode) if {0, 6} <= s and not s & {1, 5}]
        r.claims.append(Claim("m4-a-s3", "with s0, s6 (and no s1, s5) reaching a3-a5 needs s3", DEFINITION,
                              all(3 in s for s in forced), {"candidates": _sets_as_names(forced)}))
        r.claims.append(Claim("m4-a-k5", "C7+{m0,m1,m4,m5,s0,s3,s6} has a K5 minor", INDEPENDENT,
                              has_minor(ChordConfig.of(med, [0, 3, 6]).graph(), "K5")))
        comp = valid_completions(med, self.mode)
        r.expected, r.found = [], _sets_as_names(comp.minimal)
        r.claims.append(Claim("m4-a-none", "no valid completion", DEFINITION, not comp.all, {"found": r.found}))
        return r

    def case_m4_c(self) -> CaseReport:
        med = [0, 2, 4, 6]
        r = self._report("m=4/{m0,m2,m4,m6}", med, added=["s6"])
        sym = config_symmetry(ChordConfig.of(med), 1, 6)
        r.claims.append(Claim("m4-c-wlog", "adding s1 is symmetric to adding s6", INDEPENDENT,
                              sym is not None and sym[1] == "dihedral",
                              {"map": sym[0] if sym else None, "via": sym[1] if sym else None}))
        for cid in ("m4-alt-s1", "m4-alt-s4"):
            r.claims.append(self._implication(cid))
        comp = valid_completions(med, self.mode, mandatory=[6])
        rest = [s for s in comp.minimal if not s & {1, 4}]
        r.expected = [["s2", "s6"]]
        r.found = _sets_as_names(rest)
        r.claims.append(Claim("m4-c-only-s2", "without s1, s4 the only minimal completion adds s2", DEFINITION,
                              [sorted(s) for s in rest] == [[2, 6]], {"found": r.found}))
        r.claims.append(self._implication("m4-alt-s2"))
        return r

    def case_m5(self) -> CaseReport:
        r = self._report("m>=5")
        bad_minor, subgraph = [], {}
        for k in (5, 6, 7):
            for c in itertools.combinations(range(N), k):
                g = ChordConfig.of(c).graph()
                if not has_minor(g, "K33"):
                    bad_minor.append(names("m", c))
                subgraph["".join(names("m", c))] = contains_subgraph(g, K33)
        r.claims.append(Claim("m5-k33-minor", "five or more medium chords give a K3,3 minor", INDEPENDENT,
                              not bad_minor, {"failing": bad_minor}))
        r.claims.append(Claim("m5-k33-subgraph", "five or more medium chords give a K3,3 subgraph", DIAGNOSTIC,
                              all(subgraph.values()),
                              {"without_subgraph": [k for k, v in subgraph.items() if not v]}))
        return r

    def case_soundness(self) -> CaseReport:
        """Every valid completion of every orbit either contains an order-7 minimal
        graph or has a Hamiltonian cycle with more medium chords."""
        r = self._report("global-soundness")
        minimal = [h.graph for h in self.minimal7]
        failures, checked = [], 0
        for k in range(N + 1):
            for rep in wlog_orbits(k):
                for s in valid_completions(rep, self.mode).all:
                    checked += 1
                    g = ChordConfig(rep, s).graph()
                    if any(contains_subgraph(g, h) for h in minimal):
                        continue
                    best, cyc = max_medium_chords(g)
                    if best > k:
                        continue
                    failures.append({"medium": names("m", rep), "short": names("s", s),
                                     "is_upc": is_underlying_push_clique(g) is not None})
        # a failure is explained when the graph is no push clique at all, so the
        # lemma (a statement about push cliques) is not threatened by it
        unexplained = [f for f in failures if f["is_upc"]]
        r.found = failures
        r.witnesses = {"checked": checked}
        r.claims.append(Claim("soundness", "every case either terminates in a minimal graph or a reduction, "
                              "or is not an underlying push clique",
                              SOUNDNESS, not unexplained,
                              {"checked": checked, "failures": failures, "unexplained": unexplained}))
        r.claims.append(Claim("soundness-strict", "every case terminates in a minimal graph or a reduction",
                              DIAGNOSTIC, not failures, {"failures": len(failures)}))
        return r

    def run(self) -> list[CaseReport]:
        conv = self.case_conventions()
        if conv.failing():
            raise ConventionError(", ".join(c.id for c in conv.failing()))
        return [
            conv,
            self.case_identification(),
            self.case_m0(),
            self.case_m1(),
            self.case_m2_orbits(),
            self.case_none("m=2/{m0,m4}", [0, 4], "m2-m4-none"),
            self.case_m2_m5(),
            self.case_m2_m1(),
            self.case_m3_nonincident(),
            self.case_m3_coverage(),
            self.case_none("m=3/{m0,m4,m1}", [0, 4, 1], "m3-m1-none"),
            self.case_m3_m2(),
            self.case_m3_m5(),
            self.case_m4_coverage(),
            self.case_m4_a(),
            self.case_none("m=4/{m0,m1,m3,m4}", [0, 1, 3, 4], "m4-b-none"),
            self.case_m4_c(),
            self.case_m5(),
            self.case_soundness(),
        ]


def order7_minimal(census: Optional[Census] = None) -> list[MinimalGraph]:
    census = census if census is not None else census_planar_upc(7)
    return [h for h in minimal_list(census) if h.order == 7]


def replay_lemma59(mode: ReachMode | str = ReachMode.TWO_COMMON_NEIGHBORS,
                   census: Optional[Census] = None) -> list[CaseReport]:
    return Replay(order7_minimal(census), mode).run()


@dataclass
class DirectReport:
    planar_upc: list[str]
    minimal: list[str]
    violations: list[str]
    nonplanar_upc: list[str]
    nonplanar_violations: list[str]
    expected_planar_upc: int = 14
    expected_minimal: int = 3

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def counts_match(self) -> bool:
        return len(self.planar_upc) == self.expected_planar_upc and len(self.minimal) == self.expected_minimal


def verify_lemma59_direct(census: Optional[Census] = None) -> DirectReport:
    """Every order-7 planar UPC contains an order-7 minimal graph as a spanning subgraph."""
    census = census if census is not None else census_planar_upc(7)
    minimal = order7_minimal(census)
    hs = [h.graph for h in minimal]
    planar = [r for r in census.records[7] if r.upc]
    violations = [r.graph6 for r in planar if not any(contains_spanning_subgraph(r.graph, h) for h in hs)]
    nonplanar = [r for r in census.records[7] if not r.planar and is_underlying_push_clique(r.graph) is not None]
    np_viol = [r.graph6 for r in nonplanar if not any(contains_spanning_subgraph(r.graph, h) for h in hs)]
    return DirectReport(
        planar_upc=[r.graph6 for r in planar],
        minimal=[h.label for h in minimal],
        violations=violations,
        nonplanar_upc=[r.graph6 for r in nonplanar],
        nonplanar_violations=np_viol,
    )
