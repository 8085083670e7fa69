"""E_n(y) by naive subtraction e^y - sum_{k<=n} y^k/k! versus the forward tail.

The naive route loses every digit once E_n(y) drops below ~1e-16 e^y; the
forward tail keeps full relative precision.
"""

import argparse
import math
from dataclasses import dataclass

from exotic_series.core import exp_remainder


@dataclass
class Config:
    y: float = 1.0
    n_max: int = 40
    step: int = 4


def naive(n: int, y: float) -> float:
    return math.exp(y) - math.fsum(y**k / math.factorial(k) for k in range(n + 1))


def main():
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--y", type=float, default=cfg.y)
    ap.add_argument("--n-max", type=int, default=cfg.n_max)
    args = ap.parse_args()

    print(f"{'n':>4} {'forward tail':>24} {'naive':>24} {'rel. diff':>10}")
    for n in range(0, args.n_max + 1, cfg.step):
        good = exp_remainder(n, args.y).value
        bad = naive(n, args.y)
        rel = abs(bad - good) / abs(good) if good else float("nan")
        print(f"{n:4d} {good:24.16e} {bad:24.16e} {rel:10.2e}")


if __name__ == "__main__":
    main()
