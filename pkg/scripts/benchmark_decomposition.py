"""Time the two decomposition routes on powers of the corpus ideals.

Both routes must return the same associated primes; the script stops on the
first disagreement.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from copersist.core import power
from copersist.decompose import associated_primes
from copersist.fixtures import CORPUS


@dataclass
class Config:
    max_power: int = 3
    repeats: int = 1
    include_slow: bool = False


def timed(fn, repeats: int):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def main(cfg: Config) -> int:
    totals = {"split": 0.0, "incremental": 0.0}
    print(f"{'fixture':34} {'k':>2} {'gens':>6} {'split s':>9} {'incr s':>9}")
    for fx in CORPUS:
        if fx.slow and not cfg.include_slow:
            continue
        I = fx.ideal()
        for k in range(1, cfg.max_power + 1):
            Ik = power(I, k)
            a, ts = timed(lambda: associated_primes(Ik, "split"), cfg.repeats)
            b, ti = timed(lambda: associated_primes(Ik, "incremental"), cfg.repeats)
            if a != b:
                print(f"routes disagree on {fx.id} power {k}")
                return 1
            totals["split"] += ts
            totals["incremental"] += ti
            print(f"{fx.id:34} {k:>2} {len(Ik.gens):>6} {ts:>9.3f} {ti:>9.3f}")
    print(f"{'total':34} {'':>2} {'':>6} {totals['split']:>9.3f} {totals['incremental']:>9.3f}")
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-power", type=int, default=Config.max_power)
    ap.add_argument("--repeats", type=int, default=Config.repeats)
    ap.add_argument("--slow", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(Config(a.max_power, a.repeats, a.slow)))
