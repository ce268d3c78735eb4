"""Run the planar census, write the lists and manifest, print the count table.

    python scripts/run_census.py --max-n 8 --out results/census
"""
import argparse
import logging
import time
from dataclasses import dataclass

from pushclique.census import census_planar_upc, census_table, minimal_list, write_manifest


@dataclass
class CensusRun:
    max_n: int = 8
    threads: int = 1
    out: str = "results/census"
    oracle: bool = False


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(CensusRun()).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(default, bool):
            p.add_argument(flag, action="store_true")
        else:
            p.add_argument(flag, type=type(default), default=default)
    cfg = CensusRun(**vars(p.parse_args()))
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    start = time.perf_counter()
    census = census_planar_upc(cfg.max_n, threads=cfg.threads, oracle=cfg.oracle)
    minimal = minimal_list(census)
    write_manifest(census, minimal, cfg.out)
    print(census_table(census, minimal))
    for h in minimal:
        print(f"{h.label:>4} n={h.order} m={h.graph.m:>2} {h.graph6}")
    print(f"{time.perf_counter() - start:.1f}s, lists in {cfg.out}")


if __name__ == "__main__":
    main()
