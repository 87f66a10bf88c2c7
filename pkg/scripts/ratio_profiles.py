"""Tabulate the four second-derivative ratios whose suprema fix the mean-divergence constants.

    python scripts/ratio_profiles.py [--csv out.csv]
"""

import argparse
import csv
import sys

import numpy as np

from divbounds.generators import get_generator
from divbounds.jensen import second_ratio_extrema
from divbounds.verify import RATIO_PAIRS


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--csv", help="write the full profile to this file")
    ap.add_argument("--points", type=int, default=25)
    args = ap.parse_args()

    x = np.geomspace(1e-3, 1e3, args.points)
    cols = {"x": x}
    for n1, n2, expected in RATIO_PAIRS:
        g1, g2 = get_generator(n1), get_generator(n2)
        ext = second_ratio_extrema(g1, g2, (1e-3, 1e3))
        cols[f"{n1}/{n2}"] = g1.d2(x) / g2.d2(x)
        print(f"{n1:>5}/{n2:<5} sup={ext.beta:.12g} at x={ext.arg_beta:.9f} (expected {expected:.6g}); "
              f"inf on [1e-3, 1e3]={ext.alpha:.6g} at x={ext.arg_alpha:g}")

    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    w = csv.writer(out)
    w.writerow(cols)
    for row in zip(*cols.values()):
        w.writerow([f"{v:.10g}" for v in row])


if __name__ == "__main__":
    main()
