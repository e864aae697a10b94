"""Print H1 energies over partitions and H3 levels over Hermite labels, grouped by eigenvalue."""

import argparse
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from nsjack.combinatorics import ParameterSet, partitions, to_fraction
from nsjack.jack import h1_spectrum
from nsjack.typeb import h3_eigenvalue, hermite_labels


@dataclass
class SpectrumConfig:
    N: int = 3
    k: Fraction = Fraction(1, 2)
    k1: Fraction = Fraction(1, 3)
    max_degree: int = 4


def h1_levels(cfg: SpectrumConfig) -> list[tuple[tuple[int, ...], Fraction]]:
    p = ParameterSet(cfg.N, cfg.k)
    return [(lam, h1_spectrum(lam, p)) for d in range(cfg.max_degree + 1) for lam in partitions(cfg.N, d)]


def h3_levels(cfg: SpectrumConfig) -> dict[Fraction, int]:
    p = ParameterSet(cfg.N, cfg.k, cfg.k1)
    out: dict[Fraction, int] = defaultdict(int)
    for label in hermite_labels(cfg.N, cfg.max_degree):
        out[h3_eigenvalue(label, p)] += 1
    return dict(sorted(out.items()))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=SpectrumConfig.N)
    ap.add_argument("--k", default="1/2")
    ap.add_argument("--k1", default="1/3")
    ap.add_argument("--deg", type=int, default=SpectrumConfig.max_degree)
    args = ap.parse_args()
    cfg = SpectrumConfig(args.n, to_fraction(args.k), to_fraction(args.k1), args.deg)
    print(f"H1 energies, N={cfg.N}, k={cfg.k}")
    for lam, e in h1_levels(cfg):
        print(f"  {lam}: {e}")
    print(f"H3 levels (value: multiplicity), k1={cfg.k1}")
    for e, m in h3_levels(cfg).items():
        print(f"  {e}: {m}")


if __name__ == "__main__":
    main()
