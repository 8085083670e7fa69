"""Command-line entry point: ``eval``, ``verify``, ``numbers`` and ``poly``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or domain
errors. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import exact
from .catalog import catalog, get_identity, normalize_params
from .errors import DomainError
from .polys import bell_number, derangement_poly, exp_poly, laguerre_poly
from .verify import DEFAULT_TOL, emit, parse_grid, verify_all, verify_identity

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

NUMBER_TABLES = {
    "bernoulli": exact.bernoulli,
    "harmonic": exact.harmonic,
    "derangement": exact.derangement_number,
    "catalan": exact.catalan,
    "central-binomial": exact.central_binomial,
    "bell": bell_number,
    "factorial": exact.factorial,
}
POLY_FAMILIES = {
    "exp": exp_poly,
    "derangement": derangement_poly,
    "laguerre": laguerre_poly,
}
_DOMAIN_ERRORS = ("DomainError", "SingularityError", "DivergenceError")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    identity: str | None = None
    all: bool = False
    x: float | None = None
    y: float | None = None
    params: dict = field(default_factory=dict)
    tol: float = DEFAULT_TOL
    digits: int = 15
    grid: str | None = None
    format: str = "text"
    out: Path | None = None
    workers: int = 1
    family: str | None = None
    n: int | None = None
    k: int | None = None
    exact: bool = False
    poly_x: str | None = None

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if not 1 <= self.digits <= 17:
            raise UsageError("--digits must be between 1 and 17")
        if self.grid is not None and not self.grid.strip():
            raise UsageError("--grid must not be empty")
        if self.n is not None and self.n < 0:
            raise UsageError("--n must be non-negative")
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _param(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    try:
        return name.strip(), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number in {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="exotic-series", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate one identity three ways at a point")
    ev.add_argument("--identity", required=True)
    ev.add_argument("--x", type=float)
    ev.add_argument("--y", type=float, required=True)
    ev.add_argument("--param", type=_param, action="append", default=[], metavar="NAME=V")
    ev.add_argument("--tol", type=float, default=DEFAULT_TOL)
    ev.add_argument("--digits", type=int, default=15)

    ve = sub.add_parser("verify", help="sweep identities over grids")
    which = ve.add_mutually_exclusive_group(required=True)
    which.add_argument("--identity")
    which.add_argument("--all", action="store_true")
    ve.add_argument("--grid", help='e.g. "x=-2,0,2;y=-1:1:0.5;p=0:3:1"')
    ve.add_argument("--format", choices=("json", "csv", "text"), default="text")
    ve.add_argument("--out", type=Path)
    ve.add_argument("--tol", type=float, default=DEFAULT_TOL)
    ve.add_argument("--workers", type=int, default=1)

    nu = sub.add_parser("numbers", help="exact number tables for n = 0..N")
    nu.add_argument("family", choices=sorted([*NUMBER_TABLES, "stirling2"]))
    nu.add_argument("--n", type=int, required=True)
    nu.add_argument("--k", type=int)
    nu.add_argument("--exact", action="store_true")
    nu.add_argument("--digits", type=int, default=15)

    po = sub.add_parser("poly", help="polynomial coefficients or a value")
    po.add_argument("family", choices=sorted(POLY_FAMILIES))
    po.add_argument("--n", type=int, required=True)
    po.add_argument("--x", dest="poly_x", help="evaluate at x (integers and p/q stay exact)")
    po.add_argument("--exact", action="store_true")
    po.add_argument("--digits", type=int, default=15)

    sub.add_parser("list", help="list identity ids")
    return p


def parse_config(argv: Sequence[str]) -> CliConfig:
    ns = build_parser().parse_args(list(argv))
    d = vars(ns)
    if "param" in d:
        d["params"] = dict(d.pop("param"))
    return CliConfig(**d)


def _fmt(v: float | None, digits: int) -> str:
    return "nan" if v is None else f"{v:.{digits}g}"


def _fmt_exact(q: Fraction, cfg: CliConfig) -> str:
    return str(q) if cfg.exact else _fmt(float(q), cfg.digits)


def _cmd_eval(cfg: CliConfig, out) -> int:
    spec = get_identity(cfg.identity)
    params = normalize_params(spec, cfg.params)
    x = cfg.x
    if x is None:
        if len(spec.std_x) != 1:
            raise UsageError(f"{spec.id} needs --x")
        x = spec.std_x[0]
    if not spec.is_valid(x, cfg.y, params):
        raise DomainError(f"{spec.id}: (x={x:g}, y={cfg.y:g}) outside validity region")
    rep = verify_identity(spec, [(x, cfg.y, params)], cfg.tol)
    pt = rep.points[0]
    if pt.error is not None:
        print(pt.error, file=sys.stderr)
        return EXIT_USAGE if pt.error.startswith(_DOMAIN_ERRORS) else EXIT_FAIL
    d = cfg.digits
    rows = [
        ("identity", spec.id),
        ("x", _fmt(x, d)),
        ("y", _fmt(cfg.y, d)),
    ]
    rows += [(name, _fmt(v, d)) for name, v in sorted(params.items())]
    rows += [
        ("series", _fmt(pt.series, d)),
        ("quadrature", _fmt(pt.quadrature, d)),
        ("closed", _fmt(pt.closed, d)),
    ]
    if pt.closed_corrected is not None:
        rows.append(("closed_corrected", _fmt(pt.closed_corrected, d)))
    rows += [("max_dev", f"{pt.max_dev:.3e}"), ("error_bound", f"{pt.error_bound:.3e}")]
    rows.append(("verdict", rep.verdict))
    for k, v in rows:
        print(f"{k:<17}{v}", file=out)
    return EXIT_FAIL if rep.verdict == "fail" else EXIT_OK


def _cmd_verify(cfg: CliConfig, out) -> int:
    if cfg.all:
        if cfg.grid is not None:
            raise UsageError("--grid needs --identity")
        reports = verify_all(cfg.tol, cfg.workers)
        payload = emit(reports, cfg.format)
    else:
        spec = get_identity(cfg.identity)
        grid = None
        if cfg.grid is not None:
            try:
                grid = parse_grid(cfg.grid)
            except ValueError as exc:
                raise UsageError(f"--grid: {exc}") from None
        reports = [verify_identity(spec, grid, cfg.tol, cfg.workers)]
        payload = emit(reports[0], cfg.format)
    if cfg.out is not None:
        cfg.out.write_text(payload)
    else:
        out.write(payload)
    return EXIT_FAIL if any(r.verdict == "fail" for r in reports) else EXIT_OK


def _cmd_numbers(cfg: CliConfig, out) -> int:
    if cfg.family == "stirling2":
        if cfg.k is None:
            raise UsageError("stirling2 needs --k")
        if cfg.k < 0:
            raise UsageError("--k must be non-negative")
        fn = lambda n: exact.stirling2(n, cfg.k)  # noqa: E731
    else:
        fn = NUMBER_TABLES[cfg.family]
    for n in range(cfg.n + 1):
        print(_fmt_exact(Fraction(fn(n)), cfg), file=out)
    return EXIT_OK


def _cmd_poly(cfg: CliConfig, out) -> int:
    poly = POLY_FAMILIES[cfg.family](cfg.n)
    if cfg.poly_x is None:
        for m, c in enumerate(poly.coefficients):
            print(f"{m} {_fmt_exact(Fraction(c), cfg)}", file=out)
        return EXIT_OK
    try:
        xq = Fraction(cfg.poly_x)
    except ValueError:
        raise UsageError(f"--x: not a number: {cfg.poly_x!r}") from None
    print(_fmt_exact(poly.exact(xq), cfg), file=out)
    return EXIT_OK


def _cmd_list(cfg: CliConfig, out) -> int:
    for spec in sorted(catalog(), key=lambda s: s.id):
        print(f"{spec.id:<22}{spec.status:<10}{spec.description}", file=out)
    return EXIT_OK


COMMANDS = {
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "numbers": _cmd_numbers,
    "poly": _cmd_poly,
    "list": _cmd_list,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        return COMMANDS[cfg.subcommand](cfg, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
