"""Compare the lattice-point catalog with the brute-force region oracle.

The oracle knows nothing about cores: it walks dominant alcoves, groups them
by sign vector and keeps the shortest alcove of each region.

    python3 scripts/oracle_sweep.py --pairs 3,1 3,2 4,1 4,2 5,1
"""

import argparse
import time
from dataclasses import dataclass

from shicores.bijection import enumerate_catalog
from shicores.shi import bruteforce_dominant_regions, default_radius


@dataclass(frozen=True)
class SweepConfig:
    pairs: tuple[tuple[int, int], ...] = ((3, 1), (3, 2), (4, 1), (4, 2))
    extra_radius: int = 0


def main(cfg: SweepConfig) -> int:
    failures = 0
    for n, m in cfg.pairs:
        r = default_radius(n, m) + cfg.extra_radius
        t0 = time.perf_counter()
        regions = bruteforce_dominant_regions(n, m, r)
        secs = time.perf_counter() - t0
        same = {g.minimal_alcove for g in regions} == {e.alcove for e in enumerate_catalog(n, m)}
        failures += not same
        seen = sum(g.alcoves_seen for g in regions)
        print(f"n={n} m={m} radius={r}: {len(regions)} regions from {seen} alcoves "
              f"in {secs:.2f}s, catalog {'agrees' if same else 'DISAGREES'}")
    return 1 if failures else 0


def pair(text: str) -> tuple[int, int]:
    n, m = text.split(",")
    return int(n), int(m)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=pair, nargs="+", default=list(SweepConfig.pairs))
    ap.add_argument("--extra-radius", type=int, default=0)
    a = ap.parse_args()
    raise SystemExit(main(SweepConfig(tuple(a.pairs), a.extra_radius)))
