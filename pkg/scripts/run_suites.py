"""Run every verification suite and print the tightest observed slack per link.

    python scripts/run_suites.py --trials 10000 --seed 42
"""

import argparse
import time

from divbounds.verify import run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n-max", type=int, default=20)
    args = ap.parse_args()

    for name in ("mean-chain", "grand-chain", "identities", "ratio-sup"):
        t0 = time.perf_counter()
        (rep,) = run_suite(name, args.trials, args.seed, (2, args.n_max))
        print(f"== {name}: {'pass' if rep.passed else 'FAIL'}  "
              f"trials={rep.trials} failures={len(rep.failures)}  {time.perf_counter() - t0:.2f}s")
        for link, slack in rep.min_slack.items():
            print(f"   {slack: .3e}  {link}")


if __name__ == "__main__":
    main()
