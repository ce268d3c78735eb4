"""Command-line entry point: ``pushclique check|census|minimal-list|verify``."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .census import (
    MAX_CENSUS_ORDER,
    STRETCH_ORDER,
    census_planar_upc,
    census_table,
    minimal_list,
    verify_theorem,
    write_manifest,
)
from .formats import FormatError, emit_digraph6, parse_digraph6, parse_graph6
from .graph import CapacityError
from .lemma import ConventionError, Replay, order7_minimal, verify_lemma59_direct
from .push import ReachMode, is_push_clique_fast, is_push_clique_oracle, is_underlying_push_clique

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
REACH_MODES = {"two-cn": ReachMode.TWO_COMMON_NEIGHBORS, "diam2": ReachMode.DIAMETER_TWO}


class InputError(Exception):
    pass


def _expand_inputs(items: Sequence[str]) -> list[str]:
    out = []
    for item in items:
        # a lone "@" is the graph6 code of K1, never a file reference
        if item.startswith("@") and len(item) > 1:
            path = Path(item[1:])
            try:
                text = path.read_text(encoding="ascii")
            except (OSError, UnicodeDecodeError) as exc:
                raise InputError(f"cannot read {path}: {exc}") from exc
            out.extend(line.strip() for line in text.splitlines() if line.strip())
        else:
            out.append(item)
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _write_report(out: Optional[str], name: str, payload) -> None:
    if not out:
        return
    outdir = Path(out)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / name).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="ascii")


def _max_n(args) -> int:
    cap = STRETCH_ORDER if args.stretch else MAX_CENSUS_ORDER
    if not 1 <= args.max_n <= cap:
        raise InputError(f"--max-n must lie in 1..{cap}" + ("" if args.stretch else " (use --stretch for 9)"))
    return args.max_n


def cmd_check(args) -> int:
    results = []
    for text in _expand_inputs(args.graphs):
        try:
            if text.lstrip().startswith(("&", ">>digraph6<<")):
                d = parse_digraph6(text)
                holds = is_push_clique_oracle(d) if args.oracle else is_push_clique_fast(d)
                results.append({"input": text, "property": "push clique", "holds": holds})
            else:
                g = parse_graph6(text)
                w = is_underlying_push_clique(g, oracle=args.oracle)
                results.append({"input": text, "property": "underlying push clique", "holds": w is not None,
                                "witness": emit_digraph6(w) if w is not None else None})
        except (FormatError, CapacityError, ValueError) as exc:
            raise InputError(f"{text!r}: {exc}") from exc
    lines = []
    for r in results:
        line = f"{r['input']}: {r['property']}: {'yes' if r['holds'] else 'no'}"
        if r.get("witness"):
            line += f" (witness {r['witness']})"
        lines.append(line)
    _emit(args, {"results": results}, "\n".join(lines))
    return EXIT_OK if all(r["holds"] for r in results) else EXIT_FAIL


def _census(args):
    census = census_planar_upc(_max_n(args), threads=args.threads, oracle=args.oracle, stretch=args.stretch)
    return census, minimal_list(census)


def cmd_census(args) -> int:
    census, minimal = _census(args)
    manifest = None
    if args.out:
        manifest = write_manifest(census, minimal, args.out)
    if args.format == "graph6":
        for n in sorted(census.records):
            for r in census.upc_records(n):
                print(r.graph6)
        return EXIT_OK
    payload = manifest or {
        "orders": {str(n): {"upc": c, "minimal": sum(h.order == n for h in minimal)}
                   for n, c in census.upc_counts().items()},
        "upc_total": census.upc_total,
        "minimal_total": len(minimal),
    }
    _emit(args, payload, census_table(census, minimal))
    return EXIT_OK


def cmd_minimal_list(args) -> int:
    _, minimal = _census(args)
    if args.format == "graph6":
        print("\n".join(h.graph6 for h in minimal))
    else:
        rows = [{"label": h.label, "graph6": h.graph6, "order": h.order, "edges": h.graph.m} for h in minimal]
        text = "\n".join(f"{r['label']:>4} n={r['order']} m={r['edges']:>2} {r['graph6']}" for r in rows)
        _emit(args, {"minimal": rows}, text)
    return EXIT_OK


def _verify_theorem(args) -> tuple[bool, str, dict]:
    census, minimal = _census(args)
    report = verify_theorem(census, minimal)
    payload = {"check": "theorem", "max_n": report.max_n, "checked": report.checked,
               "violations": report.violations, "minimal_total": len(minimal)}
    if report.violations:
        return False, f"theorem violated by {report.violations[0]['graph6']}", payload
    if args.max_n == MAX_CENSUS_ORDER and len(minimal) != 16:
        return False, f"minimal list has {len(minimal)} graphs, expected 16", payload
    return True, f"theorem holds on {report.checked} connected planar graphs", payload


def _verify_direct() -> tuple[bool, str, dict]:
    rep = verify_lemma59_direct()
    payload = {"check": "lemma59-direct", "planar_upc": rep.planar_upc, "minimal": rep.minimal,
               "violations": rep.violations, "nonplanar_upc": len(rep.nonplanar_upc),
               "nonplanar_violations": rep.nonplanar_violations,
               "expected_planar_upc": rep.expected_planar_upc, "expected_minimal": rep.expected_minimal}
    if rep.violations:
        return False, f"order-7 planar UPC {rep.violations[0]} contains no order-7 minimal graph", payload
    if len(rep.planar_upc) != rep.expected_planar_upc:
        return False, (f"order7-planar-upc-count: found {len(rep.planar_upc)}, "
                       f"expected {rep.expected_planar_upc}"), payload
    if len(rep.minimal) != rep.expected_minimal:
        return False, f"order7-minimal-count: found {len(rep.minimal)}, expected {rep.expected_minimal}", payload
    return True, "every order-7 planar UPC contains an order-7 minimal graph", payload


def _verify_replay(args) -> tuple[bool, str, dict, str]:
    mode = REACH_MODES[args.reach_mode]
    reports = Replay(order7_minimal(), mode).run()
    payload = {"check": "lemma59-replay", "mode": mode.value, "cases": [r.to_dict() for r in reports]}
    lines = []
    for r in reports:
        lines.append(f"{r.case:24} {r.verdict}")
        for c in r.claims:
            if not c.holds:
                lines.append(f"    [{c.kind}] {c.id}: {c.statement}")
    bad = [(r, c) for r in reports for c in r.failing()]
    if bad:
        r, c = bad[0]
        return False, f"{r.case}: {c.id} ({c.statement})", payload, "\n".join(lines)
    return True, "all definition-independent claims confirmed", payload, "\n".join(lines)


def cmd_verify(args) -> int:
    if args.theorem:
        ok, msg, payload = _verify_theorem(args)
        name, body = "verify_theorem.json", msg
    elif args.replay:
        ok, msg, payload, body = _verify_replay(args)
        name = f"verify_lemma59_replay_{args.reach_mode}.json"
        body = body + "\n" + msg
    else:
        ok, msg, payload = _verify_direct()
        name, body = "verify_lemma59.json", msg
    payload["pass"] = ok
    payload["message"] = msg
    _write_report(args.out, name, payload)
    _emit(args, payload, ("PASS: " if ok else "FAIL: ") + body if not args.replay else body)
    if not ok and args.format != "json":
        print(f"first failing claim: {msg}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "graph6"], default="text")
    common.add_argument("--oracle", action="store_true", help="use the brute-force push-clique decider")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--max-n", type=int, default=MAX_CENSUS_ORDER)
    common.add_argument("--stretch", action="store_true", help="allow --max-n 9")
    common.add_argument("--out", help="output directory")
    common.add_argument("--reach-mode", choices=sorted(REACH_MODES), default="two-cn")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="pushclique", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="decide a graph6 or digraph6 input")
    p.add_argument("graphs", nargs="+", help="graph6/digraph6 strings or @file")
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("census", parents=[common], help="planar underlying push clique census")
    p.set_defaults(func=cmd_census)
    p = sub.add_parser("minimal-list", parents=[common], help="edge-minimal planar UPCs")
    p.set_defaults(func=cmd_minimal_list)
    p = sub.add_parser("verify", parents=[common], help="machine-check the theorem or the order-7 lemma")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--theorem", action="store_true")
    what.add_argument("--lemma59", action="store_true")
    p.add_argument("--replay", action="store_true", help="replay the case analysis claim by claim")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "verify" and args.replay and not args.lemma59:
        print("--replay requires --lemma59", file=sys.stderr)
        return EXIT_INPUT
    if args.threads < 1:
        print("--threads must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConventionError as exc:
        print(f"chord convention mismatch: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
