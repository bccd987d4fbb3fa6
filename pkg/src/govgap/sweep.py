"""Parameter sweeps over capability or loss magnitude.

Each grid point is solved with the baseline closed forms, an extension
variant, or with a welfare overlay (externality e), and the empirical
minimum of the deployment series is located so callers can check it against
the analytic turning point theta = lam.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from govgap import extensions as ext
from govgap.extensions import ExtensionConfig
from govgap.model import ModelParams, solve
from govgap.welfare import assess

__all__ = ["SweepPoint", "SweepResult", "sweep"]


@dataclass(frozen=True)
class SweepPoint:
    value: float
    alpha_star: float
    d_star: float
    p_star: float
    discount: float
    firm_value: float
    regime: str
    paradox_active: bool
    alpha_sb: Optional[float] = None
    sb_paradox: Optional[bool] = None


@dataclass(frozen=True)
class SweepResult:
    axis: str
    points: list[SweepPoint]
    min_index: int

    @property
    def min_point(self) -> SweepPoint:
        return self.points[self.min_index]


def _variant_point(value: float, params: ModelParams, config: ExtensionConfig) -> SweepPoint:
    """Solve one grid point under a single-deviation extension."""
    theta, mu = params.theta, params.mu
    if config.beta != 1.0:
        sol = ext.beta_optimal_deployment(params, config.beta)
        alpha = sol.alpha
        d = ext.beta_defense(alpha, params, config.beta) if alpha > 0 else 0.0
        p = ext.beta_equilibrium_prob(alpha, params, config.beta) if alpha > 0 else 1.0
        paradox = ext.beta_sign_reversal(alpha, params, config.beta) if alpha > 0 else False
        firm_value = sol.profit
        corner = sol.corner
    else:
        if config.gamma != 1.0:
            alpha = ext.alpha_star_gamma(params, config.gamma)
            comp = params.lam * theta**config.gamma
            paradox = ext.gamma_paradox_active(params, config.gamma)
        elif config.eta != 1.0:
            alpha = ext.alpha_star_eta(params, config.eta)
            comp = params.lam * theta
            paradox = ext.eta_paradox_active(params, config.eta)
        else:
            alpha = ext.alpha_star_omega(params, config.omega)
            comp = params.lam * (theta + config.omega * mu)
            paradox = ext.omega_paradox_active(params, config.omega)
        corner = comp <= 1.0
        d = 0.0 if corner or alpha == 0 else alpha * (math.sqrt(comp) - 1.0)
        p = 1.0 if corner else 1.0 / math.sqrt(comp)
        firm_value = alpha * alpha / 2.0
    return SweepPoint(
        value=value,
        alpha_star=alpha,
        d_star=d,
        p_star=p,
        discount=(theta + mu) - alpha,
        firm_value=firm_value,
        regime="corner" if corner else "interior",
        paradox_active=paradox,
    )


def sweep(
    axis: str,
    lo: float,
    hi: float,
    n: int,
    theta: float,
    mu: float,
    lam: float,
    e: Optional[float] = None,
    config: Optional[ExtensionConfig] = None,
) -> SweepResult:
    """Solve on an n-point grid over theta or lambda.

    ``theta``/``lam`` give the fixed value of whichever parameter is not
    swept.  ``e`` adds second-best deployment and the social paradox flag to
    each point; ``config`` switches to an extension variant (mutually
    exclusive with ``e``).
    """
    if axis not in ("theta", "lambda"):
        raise ValueError(f"axis must be 'theta' or 'lambda', got {axis!r}")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if n < 2:
        raise ValueError(f"need at least 2 grid points, got {n}")
    if e is not None and config is not None and not config.is_baseline:
        raise ValueError("externality overlay and extension config are exclusive")

    points: list[SweepPoint] = []
    for i in range(n):
        value = lo + (hi - lo) * i / (n - 1)
        params = ModelParams(
            theta=value if axis == "theta" else theta,
            mu=mu,
            lam=value if axis == "lambda" else lam,
        )
        if config is not None and not config.is_baseline:
            points.append(_variant_point(value, params, config))
            continue
        sol = solve(params)
        alpha_sb = sb_paradox = None
        if e is not None:
            wa = assess(params, e)
            alpha_sb, sb_paradox = wa.alpha_sb, wa.in_sb_paradox
        points.append(
            SweepPoint(
                value=value,
                alpha_star=sol.alpha_star,
                d_star=sol.d_star,
                p_star=sol.p_star,
                discount=sol.discount,
                firm_value=sol.firm_value,
                regime=sol.regime.value,
                paradox_active=(params.lam > 1.0) and (params.theta < params.lam),
                alpha_sb=alpha_sb,
                sb_paradox=sb_paradox,
            )
        )

    min_index = min(range(n), key=lambda i: (points[i].alpha_star, i))
    return SweepResult(axis=axis, points=points, min_index=min_index)
