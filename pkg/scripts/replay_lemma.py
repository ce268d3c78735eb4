"""Replay the order-7 case analysis under both reach-complete readings, side by side.

    python scripts/replay_lemma.py [--json results/replay.json]
"""
import argparse
import json
from dataclasses import dataclass
from typing import Optional

from pushclique.lemma import order7_minimal, Replay
from pushclique.push import ReachMode


@dataclass
class ReplayRun:
    json_out: Optional[str] = None


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--json", dest="json_out")
    cfg = ReplayRun(**vars(p.parse_args()))

    minimal7 = order7_minimal()
    runs = {mode.value: Replay(minimal7, mode).run() for mode in ReachMode}
    modes = list(runs)
    print(f"{'case':24} " + " ".join(f"{m:34}" for m in modes))
    for rows in zip(*runs.values()):
        print(f"{rows[0].case:24} " + " ".join(f"{r.verdict:34}" for r in rows))
    for mode, reports in runs.items():
        print(f"\nfailing claims ({mode}):")
        for r in reports:
            for c in r.claims:
                if not c.holds:
                    print(f"  {r.case:22} [{c.kind}] {c.id}: {c.statement}")
    if cfg.json_out:
        with open(cfg.json_out, "w", encoding="ascii") as fh:
            json.dump({m: [r.to_dict() for r in rs] for m, rs in runs.items()}, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
