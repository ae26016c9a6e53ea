#!/usr/bin/env python3
"""End-to-end desk reproduction: certified zeros, the moment grid with the
theta sweep, the mean-value campaign, the prime-power sums, and the
consolidated per-equation report.

Equivalent to running the CLI subcommands in order with one shared config.

Usage: python scripts/reproduce_all.py [--t-max 10000] [--out-dir zml-out]
"""
import argparse
import sys

from zml.cli import main as zml_main


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--t-max", type=str, default="10000")
    ap.add_argument("--sieve-limit", type=str, default="1000000")
    ap.add_argument("--cache-dir", type=str, default=".zml-cache")
    ap.add_argument("--out-dir", type=str, default="zml-out")
    ap.add_argument("--seed", type=str, default="42")
    args = ap.parse_args()

    common = [
        "--t-max", args.t_max,
        "--sieve-limit", args.sieve_limit,
        "--cache-dir", args.cache_dir,
        "--out-dir", args.out_dir,
        "--seed", args.seed,
    ]
    steps = [
        ["zeros"] + common,
        ["moments", "--theta-sweep", "0.3:0.9:0.2"] + common,
        ["mv-check"] + common,
        ["landau", "--x", "2,3,4,5,6"] + common,
        ["report"] + common,
    ]
    worst = 0
    for step in steps:
        print(f"\n$ zml {' '.join(step)}")
        rc = zml_main(step)
        worst = max(worst, rc)
        if rc == 1:
            break
    sys.exit(worst)


if __name__ == "__main__":
    main()
