"""Deterministic adaptive Simpson quadrature with Richardson extrapolation."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

from .errors import QuadratureFailure

__all__ = ["QuadResult", "adaptive_simpson"]

EPS = 2.0**-52


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float
    intervals: int


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-13,
    max_depth: int = 30,
    panels: int = 8,
) -> QuadResult:
    """Integrate ``f`` over the oriented interval from ``a`` to ``b``.

    The interval is cut into ``panels`` equal pieces, each refined by
    bisection with the local tolerance halved per level. A leaf is accepted
    when |S2 - S1| <= 15 tol or when the difference is at the rounding floor
    of the panel; the accepted value is S2 + (S2 - S1)/15.

    Raises:
        QuadratureFailure: a leaf reached ``max_depth`` without meeting tolerance.
    """
    if a == b:
        return QuadResult(0.0, 0.0, 0)
    if tol <= 0:
        raise ValueError("tol must be positive")

    total: list[float] = []
    err = 0.0
    leaves = 0

    # explicit stack keeps ordering deterministic and avoids recursion limits
    width = (b - a) / panels
    stack = []
    for i in range(panels - 1, -1, -1):
        lo = a + i * width
        hi = b if i == panels - 1 else a + (i + 1) * width
        mid = 0.5 * (lo + hi)
        flo, fmid, fhi = f(lo), f(mid), f(hi)
        whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)
        stack.append((lo, flo, mid, fmid, hi, fhi, whole, tol / panels, 0))

    while stack:
        lo, flo, mid, fmid, hi, fhi, whole, local_tol, depth = stack.pop()
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - whole
        scale = abs(hi - lo) * (abs(flo) + abs(flm) + abs(fmid) + abs(frm) + abs(fhi)) / 5.0
        floor = 64.0 * EPS * scale
        if abs(delta) <= 15.0 * local_tol or abs(delta) <= floor:
            total.append(left + right + delta / 15.0)
            err += abs(delta) / 15.0 + EPS * scale
            leaves += 1
            continue
        if depth + 1 >= max_depth:
            raise QuadratureFailure(
                f"depth {max_depth} reached on [{lo}, {hi}] with |delta|={abs(delta):.3g}"
            )
        half = 0.5 * local_tol
        stack.append((mid, fmid, rm, frm, hi, fhi, right, half, depth + 1))
        stack.append((lo, flo, lm, flm, mid, fmid, left, half, depth + 1))

    value = math.fsum(total)
    if not math.isfinite(value):
        raise QuadratureFailure("non-finite integrand value")
    return QuadResult(value, err, leaves)
