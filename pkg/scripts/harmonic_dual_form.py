"""Harmonic-number identity at x = 1: the closed form against the alternating
series sum (-1)^(n-1) y^(n+1) / (n! n (n+1)), with and without a factor e^y."""

import argparse
import math

from exotic_series.catalog import ein_integral_series, lhs_series
from exotic_series.special import ein


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ys", type=float, nargs="+", default=[-3, -2, -1, -0.5, 0.5, 1, 2, 3])
    args = ap.parse_args()

    print(f"{'y':>6} {'lhs series':>20} {'closed':>20} {'bare series':>20} {'e^y * series':>20}")
    for y in args.ys:
        closed = math.exp(y) * (y * ein(y).value - y + 1.0) - 1.0
        bare = ein_integral_series(y).value
        lhs = lhs_series("ID-HARMONIC-X1", 1.0, y).value
        print(f"{y:6.2f} {lhs:20.14g} {closed:20.14g} {bare:20.14g} {math.exp(y) * bare:20.14g}")


if __name__ == "__main__":
    main()
