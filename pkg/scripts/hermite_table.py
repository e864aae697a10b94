"""Tabulate generalized Hermite polynomials with their B-norms and H3/H2 eigenvalues.

Every row is checked: B-norm against the Gaussian-form product, H3 against
operator application.
"""

import argparse
import json
from dataclasses import asdict, dataclass
from fractions import Fraction

from nsjack.combinatorics import ParameterSet, to_fraction
from nsjack.polyalg import to_text
from nsjack.typeb import h2_eigenvalue, hermite, hermite_labels, hermite_norm_B, inner_gauss, spectra


@dataclass
class TableConfig:
    N: int = 2
    k: Fraction = Fraction(1, 2)
    k1: Fraction = Fraction(2)
    max_degree: int = 3


def build_table(cfg: TableConfig) -> list[dict]:
    p = ParameterSet(cfg.N, cfg.k, cfg.k1)
    rows = []
    for label in hermite_labels(cfg.N, cfg.max_degree):
        H = hermite(label, p)
        norm = hermite_norm_B(label, p)
        if inner_gauss(H, H, p) != norm:
            raise SystemExit(f"norm mismatch at {label}")
        rows.append({"beta": list(label.beta), "A": sorted(label.A), "poly": to_text(H),
                     "norm_B": str(norm), "E_H3": str(spectra(label, "H3", p)),
                     "E_H2": str(h2_eigenvalue(label, p))})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=TableConfig.N)
    ap.add_argument("--k", default="1/2")
    ap.add_argument("--k1", default="2")
    ap.add_argument("--deg", type=int, default=TableConfig.max_degree)
    args = ap.parse_args()
    cfg = TableConfig(args.n, to_fraction(args.k), to_fraction(args.k1), args.deg)
    print(json.dumps({"config": {key: str(v) for key, v in asdict(cfg).items()}, "rows": build_table(cfg)},
                     indent=1))


if __name__ == "__main__":
    main()
