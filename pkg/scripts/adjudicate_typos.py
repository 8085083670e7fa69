"""Compare printed and corrected closed forms of the flagged identities
against the series and quadrature oracles along a y sweep."""

import argparse
from dataclasses import dataclass

from exotic_series.catalog import closed_form, get_identity, lhs_series, quadrature


@dataclass
class Config:
    y_start: float = 0.25
    y_stop: float = 3.0
    y_step: float = 0.25
    stirling_x: float = 0.5
    max_k: int = 5


def sweep(ident, x, params, ys):
    spec = get_identity(ident)
    print(f"\n{spec.id} {params or ''}  {spec.description}")
    print(f"{'y':>6} {'series':>22} {'quadrature':>22} {'printed-series':>15} {'corrected-series':>17}")
    for y in ys:
        s = lhs_series(spec, x, y, params).value
        q = quadrature(spec, x, y, params).value
        pr = closed_form(spec, x, y, params, "printed").value
        co = closed_form(spec, x, y, params, "corrected").value
        print(f"{y:6.2f} {s:22.15g} {q:22.15g} {pr - s:15.3e} {co - s:17.3e}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    cfg = Config()
    ap.add_argument("--y-stop", type=float, default=cfg.y_stop)
    ap.add_argument("--max-k", type=int, default=cfg.max_k)
    args = ap.parse_args()
    cfg.y_stop, cfg.max_k = args.y_stop, args.max_k

    n = int(round((cfg.y_stop - cfg.y_start) / cfg.y_step)) + 1
    ys = [cfg.y_start + i * cfg.y_step for i in range(n)]
    sweep("ID-BERN-X1", 1.0, {}, ys)
    for k in range(1, cfg.max_k + 1):
        sweep("ID-STIRLING", cfg.stirling_x, {"k": k}, ys[::3])


if __name__ == "__main__":
    main()
