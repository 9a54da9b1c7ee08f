"""Random sweep over fibration parameters: orbit sizes and exceptional hits.

Integer-coordinate samples land on the exceptional loci often enough to see
orbits of size 1 and 2 alongside the generic size 4.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from exotica import cifibration as ci
from exotica.exactalg import GaussianRational, ProjectivePoint, proj_equal


@dataclass(frozen=True)
class SweepConfig:
    samples: int = 2000
    bound: int = 3
    seed: int = 2024


def _point(rng, bound):
    while True:
        cs = [GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))
              for _ in range(2)]
        if any(cs):
            return ProjectivePoint(*cs)


def main(cfg: SweepConfig) -> None:
    rng = random.Random(cfg.seed)
    sizes, hits, mismatches = Counter(), Counter(), 0
    for _ in range(cfg.samples):
        p = _point(rng, cfg.bound)
        sizes[len(ci.fiber_orbit(p))] += 1
        for g in ci.NONTRIVIAL:
            exc = ci.is_exceptional(g, p)
            hits[g.value] += exc
            mismatches += exc != proj_equal(ci.fiber_action(g, p), p)
    print("orbit sizes:", dict(sorted(sizes.items())))
    print("exceptional hits:", dict(hits))
    print("closed form vs fixed-point mismatches:", mismatches)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    ap.add_argument("--bound", type=int, default=SweepConfig.bound)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = ap.parse_args()
    main(SweepConfig(a.samples, a.bound, a.seed))
