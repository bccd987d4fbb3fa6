"""Endogenous capability choice: legacy-vs-frontier upgrades.

Firm value at capability ``theta_c`` is V = (alpha*)**2 / 2.  When lam > 1
the value function is U-shaped in capability with its minimum at
theta_c = lam, so a choice over an interval always lands on an endpoint and
the two-point legacy/frontier comparison is exact.  A rejected upgrade whose
frontier capability already lies beyond the paradox boundary (theta_F > lam)
is a sandboxing trap: value has not recovered even though the local slope
has turned positive again.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from govgap.model import ModelParams, optimal_deployment

__all__ = [
    "UpgradeDecision",
    "firm_value_at",
    "upgrade_decision",
    "frontier_threshold",
]


@dataclass(frozen=True)
class UpgradeDecision:
    theta_L: float
    theta_F: float
    V_L: float
    V_F: float
    adopt: bool
    #: theta_F level above which an interior-regime upgrade is strictly
    #: preferred; None when the legacy system sits in the corner regime and
    #: the values must be compared directly.
    frontier_threshold: Optional[float]
    trap: bool


def firm_value_at(theta_c: float, mu: float, lam: float) -> float:
    """V(theta_c) = (alpha*(theta_c))**2 / 2."""
    alpha = optimal_deployment(ModelParams(theta=theta_c, mu=mu, lam=lam))
    return alpha * alpha / 2.0


def frontier_threshold(theta_L: float, lam: float) -> Optional[float]:
    """Frontier capability above which the upgrade beats the legacy system.

    Only defined when both endpoints are in the interior regime
    (lam * theta_L > 1); returns None otherwise, signalling that the caller
    must compare values directly.
    """
    if theta_L <= 0 or lam <= 0:
        raise ValueError("theta_L and lam must be positive")
    if lam * theta_L <= 1.0:
        return None
    gap = max(0.0, 2.0 * math.sqrt(lam) - math.sqrt(theta_L))
    return max(theta_L, gap * gap)


def upgrade_decision(
    theta_L: float, theta_F: float, mu: float, lam: float
) -> UpgradeDecision:
    """Compare firm value at the two capability endpoints.

    Ties resolve to keeping the legacy system.  Inputs violating the
    positive-deployment condition are refused: trap status is not defined
    for a legacy system the model would shut down.
    """
    if not theta_F > theta_L > 0:
        raise ValueError(
            f"need theta_F > theta_L > 0, got theta_L={theta_L}, theta_F={theta_F}"
        )
    if not lam < mu + 1:
        raise ValueError(
            f"positive-deployment condition lam < mu + 1 fails (lam={lam}, mu={mu})"
        )
    V_L = firm_value_at(theta_L, mu, lam)
    V_F = firm_value_at(theta_F, mu, lam)
    adopt = V_F > V_L
    trap = (lam > 1.0) and (theta_F > lam) and not adopt
    return UpgradeDecision(
        theta_L=theta_L,
        theta_F=theta_F,
        V_L=V_L,
        V_F=V_F,
        adopt=adopt,
        frontier_threshold=frontier_threshold(theta_L, lam),
        trap=trap,
    )
