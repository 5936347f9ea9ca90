"""Print catalog sizes and Narayana histograms for a grid of (n, m).

    python3 scripts/narayana_table.py --max-n 6 --max-m 3
"""

import argparse
import time
from dataclasses import dataclass

from shicores.bijection import anderson_count, enumerate_catalog


@dataclass(frozen=True)
class TableConfig:
    max_n: int = 6
    max_m: int = 3


def main(cfg: TableConfig) -> int:
    print(f"{'n':>2} {'m':>2} {'count':>7} {'formula':>7} {'secs':>6}  narayana")
    status = 0
    for n in range(2, cfg.max_n + 1):
        for m in range(1, cfg.max_m + 1):
            t0 = time.perf_counter()
            cat = enumerate_catalog(n, m)
            secs = time.perf_counter() - t0
            want = anderson_count(n, m)
            flag = "" if len(cat) == want else "  MISMATCH"
            status |= bool(flag)
            hist = " ".join(map(str, cat.narayana()))
            print(f"{n:>2} {m:>2} {len(cat):>7} {want:>7} {secs:>6.2f}  {hist}{flag}")
    return status


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=TableConfig.max_n)
    ap.add_argument("--max-m", type=int, default=TableConfig.max_m)
    a = ap.parse_args()
    raise SystemExit(main(TableConfig(a.max_n, a.max_m)))
