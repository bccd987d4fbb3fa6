"""Raw vectorized objectives for the brute-force oracle.

These re-derive the objectives directly from their definitions, with no use
of the closed forms they are meant to check.  All builders return callables
over numpy arrays (broadcasting-compatible), with the zero-deployment
convention p(0, d) = 0 applied explicitly.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

__all__ = ["baseline_objective", "beta_objective", "planner_objective"]

Objective2D = Callable[[np.ndarray, np.ndarray], np.ndarray]


def baseline_objective(theta: float, mu: float, lam: float) -> Objective2D:
    """Profit (theta+mu)a - a^2/2 - a/(a+d) * lam*a*theta - d."""

    def f(a: np.ndarray, d: np.ndarray) -> np.ndarray:
        a, d = np.broadcast_arrays(np.asarray(a, float), np.asarray(d, float))
        denom = np.where(a + d > 0, a + d, 1.0)
        loss = np.where(a > 0, a / denom * lam * a * theta, 0.0)
        return (theta + mu) * a - a * a / 2.0 - loss - d

    return f


def beta_objective(theta: float, mu: float, lam: float, beta: float) -> Objective2D:
    """Profit with attack surface a**beta in the contest function."""

    def f(a: np.ndarray, d: np.ndarray) -> np.ndarray:
        a, d = np.broadcast_arrays(np.asarray(a, float), np.asarray(d, float))
        surface = np.where(a > 0, a, 1.0) ** beta
        denom = np.where(surface + d > 0, surface + d, 1.0)
        loss = np.where(a > 0, surface / denom * lam * a * theta, 0.0)
        return (theta + mu) * a - a * a / 2.0 - loss - d

    return f


def planner_objective(theta: float, mu: float, lam: float, e: float) -> Objective2D:
    """Social objective W = profit - e * p * L (joint control of a and d)."""
    private = baseline_objective(theta, mu, lam)

    def f(a: np.ndarray, d: np.ndarray) -> np.ndarray:
        a, d = np.broadcast_arrays(np.asarray(a, float), np.asarray(d, float))
        denom = np.where(a + d > 0, a + d, 1.0)
        external = np.where(a > 0, e * a / denom * lam * a * theta, 0.0)
        return private(a, d) - external

    return f
