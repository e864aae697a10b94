"""Run every verify suite over a grid of couplings and sizes and print a pass/fail matrix."""

import argparse
import time
from dataclasses import dataclass, field
from fractions import Fraction

from nsjack.combinatorics import ParameterSet
from nsjack.verify import SUITES, VerifyConfig, run_suites


@dataclass
class GridConfig:
    sizes: list[int] = field(default_factory=lambda: [2, 3])
    couplings: list[tuple[Fraction, Fraction]] = field(default_factory=lambda: [
        (Fraction(1), Fraction(1, 2)), (Fraction(1, 2), Fraction(2)), (Fraction(5, 3), Fraction(1, 3))])
    degree: int = 3
    selector: str = "all"
    seed: int = 0


def run_grid(cfg: GridConfig) -> bool:
    ok = True
    for N in cfg.sizes:
        for k, k1 in cfg.couplings:
            t0 = time.perf_counter()
            results = run_suites(cfg.selector, VerifyConfig(ParameterSet(N, k, k1), cfg.degree, cfg.seed))
            bad = [r.name for r in results if not r.ok]
            checks = sum(r.passed for r in results)
            ok &= not bad
            status = "ok" if not bad else f"FAILED {bad}"
            print(f"N={N} k={k} k1={k1}: {checks} checks, {status} ({time.perf_counter() - t0:.1f}s)")
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="2,3")
    ap.add_argument("--deg", type=int, default=3)
    ap.add_argument("--suite", default="all", help=f"'all', a module prefix, or one of {len(SUITES)} names")
    args = ap.parse_args()
    cfg = GridConfig(sizes=[int(s) for s in args.sizes.split(",")], degree=args.deg, selector=args.suite)
    raise SystemExit(0 if run_grid(cfg) else 2)


if __name__ == "__main__":
    main()
