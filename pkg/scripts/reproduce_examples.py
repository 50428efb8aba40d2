"""Print the Ass table and property verdicts for every fixture in the corpus."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from copersist.fixtures import CORPUS, run_check, verify
from copersist.properties import ass_sequence


@dataclass
class Config:
    max_power: int = 4
    include_slow: bool = False
    only: tuple[str, ...] = ()


def fmt(primes) -> str:
    return "{" + ", ".join(str(p) for p in primes) + "}"


def main(cfg: Config) -> int:
    failed = 0
    for fx in CORPUS:
        if cfg.only and fx.id not in cfg.only:
            continue
        if fx.slow and not cfg.include_slow:
            print(f"# {fx.id}: skipped (slow, pass --slow)")
            continue
        t0 = time.perf_counter()
        I = fx.ideal()
        seq = ass_sequence(I, cfg.max_power)
        print(f"# {fx.id}: {fx.provenance}")
        print(f"  I = {I}")
        for k in range(1, cfg.max_power + 1):
            print(f"  Ass(I^{k}) = {fmt(seq[k])}")
        for name in ("copersistence", "persistence", "normally-torsion-free", "stabilization"):
            print(f"  {run_check(name, I, cfg.max_power, seq)}")
        if cfg.max_power >= 3:
            print(f"  {run_check('nearly-copersistence', I, cfg.max_power, seq)}")
        bad = [o for o in verify(fx) if not o.ok]
        failed += len(bad)
        for o in bad:
            print(f"  MISMATCH {o.expectation['kind']}: {o.detail}")
        print(f"  expectations: {'ok' if not bad else f'{len(bad)} failed'} ({time.perf_counter() - t0:.1f} s)")
    return 1 if failed else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-power", type=int, default=Config.max_power)
    ap.add_argument("--slow", action="store_true", help="include the slow fixtures")
    ap.add_argument("ids", nargs="*", help="restrict to these fixture ids")
    a = ap.parse_args()
    raise SystemExit(main(Config(a.max_power, a.slow, tuple(a.ids))))
