"""Brute-force verification engine.

Grid search with progressive refinement, deliberately independent of the
analytic derivatives it validates (the objectives have kinks at regime
boundaries, so derivative-based search is avoided).  Objectives must accept
numpy arrays; evaluation is vectorized over the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "GridSpec",
    "OracleResult",
    "default_grid",
    "maximize_profit",
    "maximize_1d",
    "central_difference",
    "bisect",
]


@dataclass(frozen=True)
class GridSpec:
    """Search box and resolution for the 2-D maximizer.

    Each refinement round re-grids a window of ten coarse steps around the
    incumbent, so the step shrinks by a factor coarse_points / 10 per round.
    """

    alpha_max: float
    d_max: float
    coarse_points: int = 400
    refine_rounds: int = 3

    def __post_init__(self) -> None:
        if self.alpha_max <= 0 or self.d_max <= 0:
            raise ValueError("search ceilings must be positive")
        if self.coarse_points < 100:
            raise ValueError("coarse_points must be at least 100")
        if self.refine_rounds < 1:
            raise ValueError("refine_rounds must be at least 1")


@dataclass(frozen=True)
class OracleResult:
    alpha_hat: float
    d_hat: float
    value_hat: float
    evaluations: int


def default_grid(theta: float, mu: float) -> GridSpec:
    """Search ceilings from the no-risk benchmark theta + mu.

    The optimum never exceeds theta + mu (the security discount is
    non-negative); factor-2 and factor-4 margins cover the generalized
    objectives.
    """
    return GridSpec(alpha_max=2.0 * (theta + mu), d_max=4.0 * (theta + mu))


def _check_finite_2d(values: np.ndarray, a: np.ndarray, d: np.ndarray) -> None:
    bad = ~np.isfinite(values)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise ValueError(
            f"objective returned non-finite value at alpha={a[i]}, d={d[j]}"
        )


def maximize_profit(
    objective: Callable[[np.ndarray, np.ndarray], np.ndarray], spec: GridSpec
) -> OracleResult:
    """Deterministic nested grid maximization over [0, alpha_max] x [0, d_max].

    Ties break toward the lowest alpha, then the lowest d.
    """
    a_lo, a_hi = 0.0, spec.alpha_max
    d_lo, d_hi = 0.0, spec.d_max
    n = spec.coarse_points
    evaluations = 0
    best = (-np.inf, 0.0, 0.0)

    for _ in range(spec.refine_rounds + 1):
        a = np.linspace(a_lo, a_hi, n)
        d = np.linspace(d_lo, d_hi, n)
        values = objective(a[:, None], d[None, :])
        evaluations += values.size
        _check_finite_2d(values, a, d)
        flat = int(np.argmax(values))  # first max in C order: lowest a, then d
        i, j = divmod(flat, n)
        if values[i, j] > best[0]:
            best = (float(values[i, j]), float(a[i]), float(d[j]))
        a_step = (a_hi - a_lo) / (n - 1)
        d_step = (d_hi - d_lo) / (n - 1)
        a_lo = max(0.0, a[i] - 5 * a_step)
        a_hi = min(spec.alpha_max, a[i] + 5 * a_step)
        d_lo = max(0.0, d[j] - 5 * d_step)
        d_hi = min(spec.d_max, d[j] + 5 * d_step)

    value, alpha_hat, d_hat = best
    return OracleResult(
        alpha_hat=alpha_hat, d_hat=d_hat, value_hat=value, evaluations=evaluations
    )


def maximize_1d(
    objective: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    points: int = 400,
    rounds: int = 3,
) -> tuple[float, float]:
    """Grid + refinement maximizer on [lo, hi]; ties break toward lower x."""
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    box_lo, box_hi = lo, hi
    best = (-np.inf, lo)
    for _ in range(rounds + 1):
        x = np.linspace(box_lo, box_hi, points)
        values = np.asarray(objective(x), dtype=float)
        if not np.isfinite(values).all():
            i = int(np.argmax(~np.isfinite(values)))
            raise ValueError(f"objective returned non-finite value at x={x[i]}")
        i = int(np.argmax(values))
        if values[i] > best[0]:
            best = (float(values[i]), float(x[i]))
        step = (box_hi - box_lo) / (points - 1)
        box_lo = max(lo, x[i] - 5 * step)
        box_hi = min(hi, x[i] + 5 * step)
    return best[1], best[0]


def central_difference(f: Callable[[float], float], x: float, h: float) -> float:
    """(f(x+h) - f(x-h)) / (2h)."""
    if h <= 0:
        raise ValueError("h must be positive")
    return (f(x + h) - f(x - h)) / (2.0 * h)


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    max_iter: int = 200,
) -> float:
    """Root of f on [lo, hi] to interval width tol; requires a sign change."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0:
        raise ValueError(
            f"no sign change on bracket [{lo}, {hi}]: f(lo)={f_lo}, f(hi)={f_hi}"
        )
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0 or (hi - lo) <= tol:
            return mid
        if f_lo * f_mid < 0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)
