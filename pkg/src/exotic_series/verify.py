"""Grid sweeps comparing series, quadrature and closed forms.

A point passes when the largest pairwise deviation among the reference
values (series, quadrature, the trusted closed form and any alternate closed
forms) is at most ``tol * max(1, |value|)`` plus the reported error bounds
of the compared values. For flagged identities the printed form is judged
separately: it is rejected when it misses both oracles by more than
1000 times that allowance while every corrected value passes.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Literal

from .catalog import IdentitySpec, catalog, closed_form, get_identity, lhs_series, quadrature
from .errors import DomainError, NoConvergence, QuadratureFailure

__all__ = [
    "PointRecord",
    "VerificationReport",
    "GridSpec",
    "parse_grid",
    "build_grid",
    "verify_identity",
    "verify_all",
    "emit",
    "load_reports",
    "DEFAULT_TOL",
    "REJECT_FACTOR",
]

DEFAULT_TOL = 1e-9
REJECT_FACTOR = 1e3
Verdict = Literal["pass", "fail", "printed_form_rejected"]
Format = Literal["json", "csv", "text"]

POINT_FIELDS = (
    "x",
    "y",
    "params",
    "series",
    "quadrature",
    "closed",
    "closed_corrected",
    "max_dev",
    "skipped",
    "error_bound",
    "error",
)


def _finite(v: float | None) -> float | None:
    if v is None or not math.isfinite(v):
        return None
    return float(v)


@dataclass
class PointRecord:
    x: float
    y: float
    params: dict
    series: float | None = None
    quadrature: float | None = None
    closed: float | None = None
    closed_corrected: float | None = None
    max_dev: float | None = None
    skipped: bool = False
    error_bound: float | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "params": dict(sorted(self.params.items())),
            "series": _finite(self.series),
            "quadrature": _finite(self.quadrature),
            "closed": _finite(self.closed),
            "closed_corrected": _finite(self.closed_corrected),
            "max_dev": _finite(self.max_dev),
            "skipped": self.skipped,
            "error_bound": _finite(self.error_bound),
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> PointRecord:
        return cls(**{k: d.get(k) for k in POINT_FIELDS if k != "skipped"}, skipped=d["skipped"])


@dataclass
class VerificationReport:
    identity_id: str
    tolerance: float
    verdict: Verdict
    points: list[PointRecord] = field(default_factory=list)
    alternate_forms: dict = field(default_factory=dict)
    wall_time: float = field(default=0.0, compare=False)

    @property
    def grid_points(self) -> list[tuple[float, float, dict]]:
        return [(p.x, p.y, p.params) for p in self.points]

    @property
    def n_skipped(self) -> int:
        return sum(p.skipped for p in self.points)

    @property
    def n_evaluated(self) -> int:
        return len(self.points) - self.n_skipped

    @property
    def max_dev(self) -> float | None:
        devs = [p.max_dev for p in self.points if p.max_dev is not None]
        return max(devs) if devs else None

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_id,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
            "points": [p.to_dict() for p in self.points],
            "alternate_forms": {k: _finite(v) for k, v in sorted(self.alternate_forms.items())},
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> VerificationReport:
        return cls(
            identity_id=d["identity"],
            tolerance=d["tolerance"],
            verdict=d["verdict"],
            points=[PointRecord.from_dict(p) for p in d["points"]],
            alternate_forms=dict(d.get("alternate_forms", {})),
        )


# --- grids ----------------------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Axis values for a sweep; ``None`` axes fall back to the identity's standard grid."""

    x: tuple[float, ...] | None = None
    y: tuple[float, ...] | None = None
    params: Mapping[str, tuple[float, ...]] = field(default_factory=dict)


def _axis_values(text: str) -> tuple[float, ...]:
    text = text.strip()
    if not text:
        raise ValueError("empty axis")
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0 or stop < start:
            raise ValueError(f"bad range {text!r}")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        # round away accumulated binary noise so 0.1-steps land on 0.3, not 0.30000000000000004
        return tuple(round(start + i * step, 12) for i in range(count))
    return tuple(float(v) for v in text.split(","))


def parse_grid(text: str) -> GridSpec:
    """Parse ``"x=-2,0,0.5;y=-1:1:0.5;p=0:8:1"`` into a :class:`GridSpec`."""
    axes: dict[str, tuple[float, ...]] = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, sep, values = chunk.partition("=")
        if not sep:
            raise ValueError(f"axis spec must look like name=values, got {chunk!r}")
        name = name.strip()
        if name == "lambda":
            name = "lam"
        axes[name] = _axis_values(values)
    if not axes:
        raise ValueError("grid spec is empty")
    x = axes.pop("x", None)
    y = axes.pop("y", None)
    return GridSpec(x, y, axes)


def build_grid(
    spec: IdentitySpec, grid: GridSpec | Sequence[tuple[float, float, Mapping]] | None
) -> list[tuple[float, float, dict]]:
    if grid is None:
        return spec.standard_grid()
    if not isinstance(grid, GridSpec):
        return [(float(x), float(y), dict(ps)) for x, y, ps in grid]
    xs = grid.x if grid.x is not None else spec.std_x
    ys = grid.y if grid.y is not None else spec.std_y
    unknown = set(grid.params) - set(spec.param_names)
    if unknown:
        raise DomainError(f"{spec.id} has no parameter(s) {sorted(unknown)}")
    if grid.params:
        names = list(spec.param_names)
        choices = []
        for name in names:
            if name in grid.params:
                choices.append(grid.params[name])
            else:
                choices.append(tuple(sorted({ps[name] for ps in spec.std_params})))
        param_sets = [dict(zip(names, combo)) for combo in product(*choices)]
    else:
        param_sets = [dict(ps) for ps in spec.std_params]
    return [(x, y, dict(ps)) for ps, x, y in product(param_sets, xs, ys)]


# --- evaluation -----------------------------------------------------------------


@dataclass(frozen=True)
class _PointOutcome:
    record: PointRecord
    ok: bool
    printed_rejected: bool
    alt_devs: dict


def _evaluate_point(args: tuple[str, float, float, dict, float]) -> _PointOutcome:
    ident, x, y, params, tol = args
    spec = get_identity(ident)
    rec = PointRecord(x, y, dict(params))
    try:
        valid = spec.is_valid(x, y, _coerce(spec, params))
    except DomainError:
        valid = False
    if not valid:
        rec.skipped = True
        return _PointOutcome(rec, True, False, {})

    eval_tol = min(1e-13, tol * 1e-3)
    try:
        s = lhs_series(spec, x, y, params, eval_tol)
        q = quadrature(spec, x, y, params, eval_tol)
        printed = closed_form(spec, x, y, params, "printed")
        corrected = closed_form(spec, x, y, params, "corrected") if spec.corrected else None
        alts = {name: closed_form(spec, x, y, params, name) for name in spec.alternates}
    except (NoConvergence, QuadratureFailure, DomainError) as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
        return _PointOutcome(rec, False, False, {})

    rec.series, rec.quadrature, rec.closed = s.value, q.value, printed.value
    trusted = corrected if corrected is not None else printed
    if corrected is not None:
        rec.closed_corrected = corrected.value
    refs = [s, q, trusted, *alts.values()]
    rec.max_dev = max(abs(a.value - b.value) for a, b in combinations(refs, 2))
    scale = max(1.0, *(abs(r.value) for r in refs))
    rec.error_bound = math.fsum(r.abs_error_bound for r in refs)
    allowed = tol * scale + rec.error_bound
    ok = rec.max_dev <= allowed
    alt_devs = {name: abs(a.value - s.value) for name, a in alts.items()}

    printed_rejected = False
    if corrected is not None:
        miss = min(abs(printed.value - s.value), abs(printed.value - q.value))
        reject_at = REJECT_FACTOR * tol * scale + rec.error_bound + printed.abs_error_bound
        printed_rejected = miss > reject_at
    return _PointOutcome(rec, ok, printed_rejected, alt_devs)


def _coerce(spec: IdentitySpec, params: Mapping) -> dict:
    from .catalog import normalize_params

    return normalize_params(spec, params)


def _run(tasks: list, workers: int) -> list[_PointOutcome]:
    if workers <= 1 or len(tasks) < 2:
        return [_evaluate_point(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate_point, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


def _assemble(spec: IdentitySpec, tol: float, outcomes: list[_PointOutcome], t0: float):
    records = [o.record for o in outcomes]
    evaluated = [o for o in outcomes if not o.record.skipped]
    if not evaluated:
        verdict: Verdict = "pass"
    elif not all(o.ok for o in evaluated):
        verdict = "fail"
    elif spec.corrected is not None and any(o.printed_rejected for o in evaluated):
        verdict = "printed_form_rejected"
    else:
        verdict = "pass"
    alt = {}
    for name in spec.alternates:
        devs = [o.alt_devs[name] for o in evaluated if name in o.alt_devs]
        alt[name] = max(devs) if devs else None
    return VerificationReport(spec.id, tol, verdict, records, alt, time.perf_counter() - t0)


def verify_identity(
    identity: str | IdentitySpec,
    grid: GridSpec | Sequence[tuple[float, float, Mapping]] | None = None,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
) -> VerificationReport:
    """Three-way comparison of one identity over a grid.

    ``grid`` is ``None`` for the standard grid, a :class:`GridSpec` to
    override axes, or an explicit list of ``(x, y, params)`` points. Invalid
    points are recorded as skipped; evaluation failures are recorded on the
    point and make the verdict ``fail``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    t0 = time.perf_counter()
    spec = get_identity(identity)
    points = build_grid(spec, grid)
    tasks = [(spec.id, x, y, ps, tol) for x, y, ps in points]
    return _assemble(spec, tol, _run(tasks, workers), t0)


def verify_all(tol: float = DEFAULT_TOL, workers: int = 1) -> list[VerificationReport]:
    """Every catalog entry on its standard grid, ordered by identity id."""
    specs = sorted(catalog(), key=lambda s: s.id)
    t0 = time.perf_counter()
    tasks, spans = [], []
    for spec in specs:
        pts = spec.standard_grid()
        spans.append((spec, len(tasks), len(tasks) + len(pts)))
        tasks.extend((spec.id, x, y, ps, tol) for x, y, ps in pts)
    outcomes = _run(tasks, workers)
    return [_assemble(spec, tol, outcomes[a:b], t0) for spec, a, b in spans]


# --- serialization --------------------------------------------------------------


def _as_list(reports) -> tuple[list[VerificationReport], bool]:
    if isinstance(reports, VerificationReport):
        return [reports], True
    return list(reports), False


def emit(reports: VerificationReport | Iterable[VerificationReport], fmt: Format = "json") -> str:
    """Serialize one report or a list of reports.

    JSON keeps a fixed key order and full float precision; CSV has one row
    per (identity, point); text has one line per identity.
    """
    items, single = _as_list(reports)
    if fmt == "json":
        payload = items[0].to_dict() if single else [r.to_dict() for r in items]
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("identity", "verdict", "tolerance", *POINT_FIELDS))
        for r in items:
            for p in r.points:
                d = p.to_dict()
                row = [r.identity_id, r.verdict, repr(r.tolerance)]
                for key in POINT_FIELDS:
                    v = d[key]
                    if key == "params":
                        v = json.dumps(v, sort_keys=True)
                    elif v is None:
                        v = ""
                    elif isinstance(v, float):
                        v = repr(v)
                    row.append(v)
                writer.writerow(row)
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for r in items:
            if not r.points:
                lines.append(f"{r.identity_id:<22} {r.verdict:<22} no points")
                continue
            md = r.max_dev
            md_s = "n/a" if md is None else f"{md:.3e}"
            line = (
                f"{r.identity_id:<22} {r.verdict:<22} points={len(r.points):<4d} "
                f"skipped={r.n_skipped:<3d} max_dev={md_s} tol={r.tolerance:g}"
            )
            for name, dev in sorted(r.alternate_forms.items()):
                line += f" {name}_dev={'n/a' if dev is None else f'{dev:.3e}'}"
            errors = sum(p.error is not None for p in r.points)
            if errors:
                line += f" errors={errors}"
            lines.append(line)
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def load_reports(text: str) -> VerificationReport | list[VerificationReport]:
    """Inverse of ``emit(..., "json")``."""
    data = json.loads(text)
    if isinstance(data, list):
        return [VerificationReport.from_dict(d) for d in data]
    return VerificationReport.from_dict(data)
