"""Print SW coefficient tables for X_m and check pairwise distinctness.

    python3 scripts/sw_table.py --max-m 20 --r 4
"""

import argparse
import time
from dataclasses import dataclass

from exotica.groupring import augmentation
from exotica.swcalc import distinguish, sw_table, sw_xm


@dataclass(frozen=True)
class TableConfig:
    max_m: int = 10
    r: int = 4
    show: int = 5  # tables printed in full for m <= show


def main(cfg: TableConfig) -> None:
    for m in range(1, cfg.max_m + 1):
        sw = sw_xm(m, cfg.r)
        if m <= cfg.show:
            cells = "  ".join(f"{g[0]:+d}:{c}" for g, c in sw_table(sw))
            print(f"m={m:<3d} {cells}")
        assert augmentation(sw.element) == 1
    start = time.perf_counter()
    report = distinguish(range(1, cfg.max_m + 1), cfg.r)
    elapsed = time.perf_counter() - start
    n = len(report.pairs)
    ok = sum(v.distinct for v in report.pairs)
    print(f"{ok}/{n} pairs distinct at r={cfg.r} ({elapsed * 1000:.1f} ms)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=TableConfig.max_m)
    ap.add_argument("--r", type=int, default=TableConfig.r)
    ap.add_argument("--show", type=int, default=TableConfig.show)
    a = ap.parse_args()
    main(TableConfig(a.max_m, a.r, a.show))
