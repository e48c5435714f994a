#!/usr/bin/env python3
"""Write a synthetic tensile-test curve: linear elastic loading, a hardening
plastic stretch, then a sharp load drop at failure."""

import argparse
import csv
import random


def stress(strain):
    if strain < 0.04:
        return 2500.0 * strain
    if strain < 0.16:
        d = strain - 0.04
        return 100.0 + 150.0 * d - 500.0 * d * d
    return 8.0 + 20.0 * (strain - 0.16)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/stress_strain_synthetic.csv")
    ap.add_argument("--count", type=int, default=2001)
    ap.add_argument("--max-strain", type=float, default=0.2)
    ap.add_argument("--sigma", type=float, default=1.0, help="noise std dev in stress units")
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    with open(args.out, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["strain", "stress"])
        for i in range(args.count):
            e = args.max_strain * i / (args.count - 1)
            w.writerow([repr(e), repr(round(stress(e) + rng.gauss(0.0, args.sigma), 6))])


if __name__ == "__main__":
    main()
