"""Social optima and externality-expanded paradox regions.

A share ``e >= 0`` of breach damage falls outside the firm, so total social
damage is (1 + e) * p * L.  Two benchmarks:

* first-best: a planner picks deployment and defense jointly, which is the
  private problem with ``lam`` scaled to (1 + e) * lam everywhere, including
  the regime threshold;
* second-best: a regulator sets deployment while the firm keeps choosing
  defense privately, so the regime split stays at the private threshold
  lam * theta = 1 and the interior coefficient becomes (2 + e) * sqrt(x).

The discount-function algebra (H, S_e) underlies the dominance ordering
alpha_sb <= alpha_fb <= alpha_private and the widened paradox thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from govgap.model import ModelParams, optimal_deployment

__all__ = [
    "Externality",
    "ParadoxThresholds",
    "WelfareAssessment",
    "first_best_deployment",
    "first_best_clamped",
    "second_best_deployment",
    "second_best_clamped",
    "sb_welfare_objective",
    "fb_welfare_objective",
    "paradox_thresholds",
    "discount_functions",
    "assess",
]


@dataclass(frozen=True)
class Externality:
    """Breach externality multiplier e, with the derived scale E = 1 + e."""

    e: float

    def __post_init__(self) -> None:
        if self.e < 0:
            raise ValueError(f"externality e must be non-negative, got {self.e}")

    @property
    def E(self) -> float:
        return 1.0 + self.e


@dataclass(frozen=True)
class ParadoxThresholds:
    """Interior theta-thresholds and corner conditions of the three problems."""

    private: float  # lam
    fb: float  # (1 + e) * lam
    sb: float  # ((2 + e) / 2)**2 * lam
    corner_private: bool  # lam > 1
    corner_social: bool  # (1 + e) * lam > 1


@dataclass(frozen=True)
class WelfareAssessment:
    """Private, first-best and second-best deployment at one point, plus the
    paradox thresholds and regime-aware in-region flags."""

    alpha_private: float
    alpha_fb: float
    alpha_sb: float
    private_threshold: float
    fb_threshold: float
    sb_threshold: float
    in_private_paradox: bool
    in_fb_paradox: bool
    in_sb_paradox: bool
    fb_clamped: bool = False
    sb_clamped: bool = False


def _check_e(e: float) -> None:
    if e < 0:
        raise ValueError(f"externality e must be non-negative, got {e}")


def _fb_coefficient(params: ModelParams, e: float) -> float:
    scaled = (1.0 + e) * params.lam
    x = scaled * params.theta
    if x <= 1.0:
        return params.mu + params.theta * (1.0 - scaled)
    return params.theta + params.mu + 1.0 - 2.0 * math.sqrt(x)


def first_best_deployment(params: ModelParams, e: float) -> float:
    """Planner's deployment under joint control of alpha and d."""
    _check_e(e)
    return max(0.0, _fb_coefficient(params, e))


def first_best_clamped(params: ModelParams, e: float) -> bool:
    _check_e(e)
    return _fb_coefficient(params, e) < 0.0


def _sb_coefficient(params: ModelParams, e: float) -> float:
    x = params.lam * params.theta
    if x <= 1.0:
        return params.mu + params.theta * (1.0 - (1.0 + e) * params.lam)
    return params.theta + params.mu + 1.0 - (2.0 + e) * math.sqrt(x)


def second_best_deployment(params: ModelParams, e: float) -> float:
    """Regulator's deployment when the firm keeps its private defense rule.

    The regime split is the private one, lam * theta = 1, regardless of e.
    """
    _check_e(e)
    return max(0.0, _sb_coefficient(params, e))


def second_best_clamped(params: ModelParams, e: float) -> bool:
    """True when the second-best closed form is negative and was clamped.

    Distinguishes a binding zero from an interior zero.
    """
    _check_e(e)
    return _sb_coefficient(params, e) < 0.0


def sb_welfare_objective(alpha: float, params: ModelParams, e: float) -> float:
    """Second-best welfare at deployment alpha, defense chosen privately."""
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    _check_e(e)
    return _sb_coefficient(params, e) * alpha - alpha * alpha / 2.0


def fb_welfare_objective(alpha: float, params: ModelParams, e: float) -> float:
    """First-best welfare at deployment alpha, defense chosen by the planner."""
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    _check_e(e)
    return _fb_coefficient(params, e) * alpha - alpha * alpha / 2.0


def paradox_thresholds(lam: float, e: float) -> ParadoxThresholds:
    """Interior paradox thresholds and corner conditions for a given lam, e."""
    if lam <= 0:
        raise ValueError(f"lam must be positive, got {lam}")
    _check_e(e)
    return ParadoxThresholds(
        private=lam,
        fb=(1.0 + e) * lam,
        sb=((2.0 + e) / 2.0) ** 2 * lam,
        corner_private=lam > 1.0,
        corner_social=(1.0 + e) * lam > 1.0,
    )


def discount_functions(x: float, e: float) -> tuple[float, float, float]:
    """Return (H(x), S_e(x), H(E*x)).

    H is the private security discount as a function of the composite
    x = lam * theta: x below 1, 2*sqrt(x)-1 above.  S_e is the second-best
    social discount, which keeps the private split at x = 1 but scales to
    E*x (corner) or (2+e)*sqrt(x)-1 (interior).  H(E*x) is the first-best
    discount, split at E*x = 1.  S_e(x) >= H(E*x) always, with equality only
    when both x and E*x are at most 1.
    """
    if x < 0:
        raise ValueError("x must be non-negative")
    _check_e(e)
    E = 1.0 + e

    def H(z: float) -> float:
        return z if z <= 1.0 else 2.0 * math.sqrt(z) - 1.0

    S = E * x if x <= 1.0 else (2.0 + e) * math.sqrt(x) - 1.0
    return H(x), S, H(E * x)


def _paradox_flags(params: ModelParams, e: float) -> tuple[bool, bool, bool]:
    """Regime-aware in-paradox flags for the private, FB and SB problems."""
    lam, theta = params.lam, params.theta
    E = 1.0 + e
    if lam * theta <= 1.0:
        private = lam > 1.0
    else:
        private = theta < lam
    if E * lam * theta <= 1.0:
        fb = E * lam > 1.0
    else:
        fb = theta < E * lam
    if lam * theta <= 1.0:
        sb = E * lam > 1.0
    else:
        sb = theta < ((2.0 + e) / 2.0) ** 2 * lam
    return private, fb, sb


def assess(params: ModelParams, e: float) -> WelfareAssessment:
    """Full welfare comparison at one parameter point."""
    _check_e(e)
    thresholds = paradox_thresholds(params.lam, e)
    private, fb, sb = _paradox_flags(params, e)
    return WelfareAssessment(
        alpha_private=optimal_deployment(params),
        alpha_fb=first_best_deployment(params, e),
        alpha_sb=second_best_deployment(params, e),
        private_threshold=thresholds.private,
        fb_threshold=thresholds.fb,
        sb_threshold=thresholds.sb,
        in_private_paradox=private,
        in_fb_paradox=fb,
        in_sb_paradox=sb,
        fb_clamped=first_best_clamped(params, e),
        sb_clamped=second_best_clamped(params, e),
    )
