"""Show how the grand-chain ratios behave as P approaches Q along P_t = Q + t (P - Q).

Every chained quantity vanishes to second order in t, so the ratios of
neighbouring links converge to constants that show which links are tight.

    python scripts/chain_tightness.py --n 6 --seed 3
"""

import argparse

import numpy as np

from divbounds.prob import new_distribution, sample_pair
from divbounds.verify import grand_chain_checks


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()

    P, Q = sample_pair(args.n, args.seed)
    for t in (1.0, 0.5, 0.1, 0.01, 1e-3):
        Pt = new_distribution(Q.array + t * (P.array - Q.array), normalize=True)
        checks = [c for c in grand_chain_checks(Pt, Q) if not c.link.startswith("[")]
        ratios = "  ".join(f"{c.lhs / c.rhs:.4f}" for c in checks)
        print(f"t={t:<6g} lhs/rhs per link: {ratios}")
    print("links:", "; ".join(c.link for c in checks))


if __name__ == "__main__":
    main()
