"""Baseline environment types and closed-form solutions.

A firm chooses deployment intensity ``alpha`` and security spend ``d`` in an
environment described by capability ``theta``, organizational readiness
``mu``, and conditional breach-loss magnitude ``lam``.  The raw objective is

    profit(alpha, d) = (theta + mu) * alpha - alpha**2 / 2
                       - alpha / (alpha + d) * lam * alpha * theta - d

Once defense is chosen optimally the problem splits into two regimes at
``lam * theta = 1``: below it AI-specific defense is not worthwhile (corner,
``d* = 0``), above it defense scales proportionally with deployment
(interior).  All quantities here are closed forms; the ``oracle`` module
provides the independent numerical check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "ModelParams",
    "Regime",
    "FirmSolution",
    "classify_regime",
    "profit",
    "optimal_defense",
    "breach_probability",
    "equilibrium_breach_prob",
    "reduced_profit",
    "optimal_deployment",
    "deployment_clamped",
    "security_discount",
    "deployment_slope",
    "lambda_slope",
    "solve",
]


@dataclass(frozen=True)
class ModelParams:
    """Environment for one firm.

    theta: AI capability level (dimensionless index, > 0).
    mu: complementary organizational readiness (> 0).
    lam: conditional breach-loss magnitude, normalized so the global-average
        breach cost maps to 1 (> 0).
    """

    theta: float
    mu: float
    lam: float

    def __post_init__(self) -> None:
        if not (self.theta > 0 and self.mu > 0 and self.lam > 0):
            raise ValueError(
                f"theta, mu, lam must all be positive, got "
                f"({self.theta}, {self.mu}, {self.lam})"
            )

    @property
    def positive_deployment_ok(self) -> bool:
        """True when lam < mu + 1, which guarantees alpha* > 0 for all theta."""
        return self.lam < self.mu + 1


class Regime(enum.Enum):
    CORNER = "corner"
    INTERIOR = "interior"


@dataclass(frozen=True)
class FirmSolution:
    """Private optimum at one parameter point.

    ``discount`` is the security discount alpha0 - alpha_star; ``firm_value``
    is (alpha_star)**2 / 2, which equals realized profit whenever deployment
    is positive.  ``clamped`` records that the closed form went negative
    (positive-deployment condition violated) and alpha_star was set to 0.
    """

    regime: Regime
    alpha_star: float
    d_star: float
    p_star: float
    expected_loss: float
    profit: float
    alpha0: float
    discount: float
    firm_value: float
    clamped: bool = False


def classify_regime(params: ModelParams) -> Regime:
    """Corner iff lam * theta <= 1 (the boundary counts as corner)."""
    return Regime.CORNER if params.lam * params.theta <= 1.0 else Regime.INTERIOR


def profit(alpha: float, d: float, params: ModelParams) -> float:
    """Raw objective at an arbitrary (alpha, d).

    The breach-probability factor is taken to be 0 at alpha = 0, so zero
    deployment costs exactly the security spend d.
    """
    if alpha < 0 or d < 0:
        raise ValueError("alpha and d must be non-negative")
    gross = (params.theta + params.mu) * alpha - alpha * alpha / 2.0
    if alpha == 0:
        return gross - d
    expected_loss = alpha / (alpha + d) * params.lam * alpha * params.theta
    return gross - expected_loss - d


def optimal_defense(alpha: float, params: ModelParams) -> float:
    """Profit-maximizing security spend for a given deployment level."""
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    x = params.lam * params.theta
    if x <= 1.0:
        return 0.0
    return alpha * (math.sqrt(x) - 1.0)


def breach_probability(alpha: float, d: float) -> float:
    """Contest-form breach probability alpha / (alpha + d); 0 at alpha = 0."""
    if alpha < 0 or d < 0:
        raise ValueError("alpha and d must be non-negative")
    if alpha == 0:
        return 0.0
    return alpha / (alpha + d)


def equilibrium_breach_prob(params: ModelParams) -> float:
    """Breach probability under optimal defense; independent of alpha."""
    x = params.lam * params.theta
    return 1.0 if x <= 1.0 else 1.0 / math.sqrt(x)


def reduced_profit(alpha: float, params: ModelParams) -> float:
    """Profit after substituting the optimal defense rule for this regime."""
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    return _reduced_coefficient(params) * alpha - alpha * alpha / 2.0


def _reduced_coefficient(params: ModelParams) -> float:
    """Linear coefficient of the regime-specific reduced-form quadratic."""
    x = params.lam * params.theta
    if x <= 1.0:
        return params.mu + params.theta * (1.0 - params.lam)
    return params.theta + params.mu + 1.0 - 2.0 * math.sqrt(x)


def optimal_deployment(params: ModelParams) -> float:
    """Closed-form optimal deployment, clamped at 0.

    Strictly positive whenever ``positive_deployment_ok`` holds; a negative
    closed form (the condition fails) is clamped and reported by
    :func:`deployment_clamped`.
    """
    return max(0.0, _reduced_coefficient(params))


def deployment_clamped(params: ModelParams) -> bool:
    """True when the unclamped closed form is negative at this point."""
    return _reduced_coefficient(params) < 0.0


def security_discount(params: ModelParams) -> float:
    """Gap between the no-risk benchmark theta + mu and optimal deployment.

    lam * theta in the corner regime, 2 * sqrt(lam * theta) - 1 in the
    interior; continuous and C1 at the regime boundary, independent of mu.
    """
    x = params.lam * params.theta
    return x if x <= 1.0 else 2.0 * math.sqrt(x) - 1.0


def deployment_slope(params: ModelParams) -> float:
    """d(alpha*)/d(theta): 1 - lam (corner) or 1 - sqrt(lam/theta) (interior).

    At the kink lam * theta = 1 both one-sided derivatives equal 1 - lam, and
    that common value is returned.  Negative exactly on the paradox region
    theta < lam (which requires lam > 1).
    """
    x = params.lam * params.theta
    if x <= 1.0:
        return 1.0 - params.lam
    return 1.0 - math.sqrt(params.lam / params.theta)


def lambda_slope(params: ModelParams) -> float:
    """d(alpha*)/d(lam): -theta (corner) or -sqrt(theta/lam) (interior).

    Strictly negative everywhere; both branches give -1/lam at the boundary.
    """
    x = params.lam * params.theta
    if x <= 1.0:
        return -params.theta
    return -math.sqrt(params.theta / params.lam)


def solve(params: ModelParams) -> FirmSolution:
    """Bundle the closed forms into one mutually consistent solution."""
    regime = classify_regime(params)
    clamped = deployment_clamped(params)
    alpha = optimal_deployment(params)
    d = optimal_defense(alpha, params) if alpha > 0 else 0.0
    p = equilibrium_breach_prob(params)
    alpha0 = params.theta + params.mu
    return FirmSolution(
        regime=regime,
        alpha_star=alpha,
        d_star=d,
        p_star=p,
        expected_loss=p * params.lam * alpha * params.theta,
        profit=reduced_profit(alpha, params),
        alpha0=alpha0,
        discount=alpha0 - alpha,
        firm_value=alpha * alpha / 2.0,
        clamped=clamped,
    )
