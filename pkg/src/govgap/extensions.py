"""Generalized variants of the baseline model, one deviation at a time.

* gamma: authority exposure scales as theta**gamma instead of theta.
* eta: productivity scales as theta**eta instead of theta.
* omega: a share of readiness mu spills into the damage channel.
* beta: the attack surface grows as alpha**beta, so defense can no longer
  fully offset deployment growth and the optimum comes from a first-order
  condition solved numerically.

Also the endogenous governance-investment problem: paying a convex cost
k * I**2 / 2 to reduce the inherited loss magnitude from lambda0 to
lambda0 - I, with the fixed point found by bisection on the first-order
condition k * I = -V'(lambda0 - I).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from govgap.model import ModelParams, optimal_deployment
from govgap.oracle import bisect

__all__ = [
    "ExtensionConfig",
    "BetaDeployment",
    "GovernanceProblem",
    "alpha_star_gamma",
    "gamma_clamped",
    "gamma_paradox_active",
    "alpha_star_eta",
    "eta_clamped",
    "eta_paradox_active",
    "alpha_star_omega",
    "omega_clamped",
    "omega_paradox_active",
    "beta_interior_feasible",
    "beta_defense",
    "beta_equilibrium_prob",
    "beta_reduced_profit",
    "beta_optimal_deployment",
    "beta_sign_reversal",
    "governance_marginal_value",
    "solve_governance",
]

#: Floor on the residual loss magnitude in the governance problem; prevents
#: division by zero in the interior marginal-value expression.
LAMBDA_FLOOR = 1e-6


@dataclass(frozen=True)
class ExtensionConfig:
    """Selects and parameterizes one generalized variant.

    Defaults reproduce the baseline exactly.  Varying more than one knob at a
    time is rejected: the variants are studied one component at a time.
    """

    gamma: float = 1.0
    beta: float = 1.0
    eta: float = 1.0
    omega: float = 0.0

    def __post_init__(self) -> None:
        if self.gamma < 0:
            raise ValueError(f"gamma must be non-negative, got {self.gamma}")
        if self.beta < 1:
            raise ValueError(f"beta must be >= 1, got {self.beta}")
        if self.eta <= 0:
            raise ValueError(f"eta must be positive, got {self.eta}")
        if not 0 <= self.omega <= 1:
            raise ValueError(f"omega must lie in [0, 1], got {self.omega}")
        deviations = sum(
            [self.gamma != 1.0, self.beta != 1.0, self.eta != 1.0, self.omega != 0.0]
        )
        if deviations > 1:
            raise ValueError(
                "extensions vary one component at a time; "
                f"got {deviations} simultaneous deviations"
            )

    @property
    def is_baseline(self) -> bool:
        return (
            self.gamma == 1.0
            and self.beta == 1.0
            and self.eta == 1.0
            and self.omega == 0.0
        )


@dataclass(frozen=True)
class BetaDeployment:
    """Optimal deployment under superlinear attack-surface growth."""

    alpha: float
    profit: float
    corner: bool  # defense infeasible / zero at the optimum
    clamped: bool  # no candidate with positive profit; alpha forced to 0


@dataclass(frozen=True)
class GovernanceProblem:
    """Solved governance-investment fixed point."""

    lambda0: float
    k: float
    I_star: float
    lambda_star: float
    capped: bool  # lambda_star hit the LAMBDA_FLOOR cap


# --- exposure elasticity (gamma) -------------------------------------------


def _gamma_coefficient(params: ModelParams, gamma: float) -> float:
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    comp = params.lam * params.theta**gamma
    if comp <= 1.0:
        return params.mu + params.theta - comp
    return params.theta + params.mu + 1.0 - 2.0 * math.sqrt(comp)


def alpha_star_gamma(params: ModelParams, gamma: float) -> float:
    return max(0.0, _gamma_coefficient(params, gamma))


def gamma_clamped(params: ModelParams, gamma: float) -> bool:
    return _gamma_coefficient(params, gamma) < 0.0


def gamma_paradox_active(params: ModelParams, gamma: float) -> bool:
    """Sign-reversal predicate for d(alpha*)/d(theta) under exposure theta**gamma."""
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    lam, theta = params.lam, params.theta
    if lam * theta**gamma <= 1.0:
        return lam * gamma * theta ** (gamma - 1.0) > 1.0
    return gamma * math.sqrt(lam) * theta ** (gamma / 2.0 - 1.0) > 1.0


# --- productivity curvature (eta) ------------------------------------------


def _eta_coefficient(params: ModelParams, eta: float) -> float:
    if eta <= 0:
        raise ValueError("eta must be positive")
    x = params.lam * params.theta
    if x <= 1.0:
        return params.mu + params.theta**eta - x
    return params.theta**eta + params.mu + 1.0 - 2.0 * math.sqrt(x)


def alpha_star_eta(params: ModelParams, eta: float) -> float:
    return max(0.0, _eta_coefficient(params, eta))


def eta_clamped(params: ModelParams, eta: float) -> bool:
    return _eta_coefficient(params, eta) < 0.0


def eta_paradox_active(params: ModelParams, eta: float) -> bool:
    """Sign-reversal predicate under productivity theta**eta."""
    if eta <= 0:
        raise ValueError("eta must be positive")
    lam, theta = params.lam, params.theta
    if lam * theta <= 1.0:
        return eta * theta ** (eta - 1.0) < lam
    return eta * theta ** (eta - 0.5) < math.sqrt(lam)


# --- readiness spillover (omega) -------------------------------------------


def _omega_coefficient(params: ModelParams, omega: float) -> float:
    if not 0 <= omega <= 1:
        raise ValueError("omega must lie in [0, 1]")
    comp = params.lam * (params.theta + omega * params.mu)
    if comp <= 1.0:
        return params.mu + params.theta - comp
    return params.theta + params.mu + 1.0 - 2.0 * math.sqrt(comp)


def alpha_star_omega(params: ModelParams, omega: float) -> float:
    return max(0.0, _omega_coefficient(params, omega))


def omega_clamped(params: ModelParams, omega: float) -> bool:
    return _omega_coefficient(params, omega) < 0.0


def omega_paradox_active(params: ModelParams, omega: float) -> bool:
    """Sign-reversal predicate when mu spills into the damage channel."""
    if not 0 <= omega <= 1:
        raise ValueError("omega must lie in [0, 1]")
    lam, theta, mu = params.lam, params.theta, params.mu
    if lam * (theta + omega * mu) <= 1.0:
        return lam > 1.0
    return theta + omega * mu < lam


# --- attack-surface curvature (beta) ---------------------------------------


def beta_interior_feasible(alpha: float, params: ModelParams, beta: float) -> bool:
    """True when positive defense is feasible at this deployment level."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if beta < 1:
        raise ValueError("beta must be >= 1")
    return alpha ** ((1.0 - beta) / 2.0) * math.sqrt(params.lam * params.theta) >= 1.0


def beta_defense(alpha: float, params: ModelParams, beta: float) -> float:
    """Optimal defense alpha**((beta+1)/2) * sqrt(lam*theta) - alpha**beta.

    Returns 0 when the expression is negative (corner: defense infeasible).
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if beta < 1:
        raise ValueError("beta must be >= 1")
    d = alpha ** ((beta + 1.0) / 2.0) * math.sqrt(
        params.lam * params.theta
    ) - alpha**beta
    return max(0.0, d)


def beta_equilibrium_prob(alpha: float, params: ModelParams, beta: float) -> float:
    """Breach probability under optimal defense, capped at 1 at the corner."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if beta < 1:
        raise ValueError("beta must be >= 1")
    if not beta_interior_feasible(alpha, params, beta):
        return 1.0
    p = alpha ** ((beta - 1.0) / 2.0) / math.sqrt(params.lam * params.theta)
    return min(1.0, p)


def beta_reduced_profit(alpha: float, params: ModelParams, beta: float) -> float:
    """Profit at deployment alpha with defense substituted out."""
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    theta, mu, lam = params.theta, params.mu, params.lam
    gross = (theta + mu) * alpha - alpha * alpha / 2.0
    if alpha == 0:
        return 0.0
    if beta_interior_feasible(alpha, params, beta):
        root = math.sqrt(lam * theta)
        return gross - 2.0 * alpha ** ((beta + 1.0) / 2.0) * root + alpha**beta
    return gross - lam * alpha * theta


def _beta_foc(alpha: float, params: ModelParams, beta: float) -> float:
    theta, mu, lam = params.theta, params.mu, params.lam
    return (
        theta
        + mu
        - alpha
        - (beta + 1.0) * alpha ** ((beta - 1.0) / 2.0) * math.sqrt(lam * theta)
        + beta * alpha ** (beta - 1.0)
    )


def beta_optimal_deployment(params: ModelParams, beta: float) -> BetaDeployment:
    """Maximize the reduced-form profit under attack surface alpha**beta.

    beta = 1 falls back to the baseline closed form.  Otherwise the interior
    first-order condition is bracketed on (0, theta + mu] with a 200-point
    scan and bisected to 1e-10; the corner-branch vertex is also considered,
    and candidates are ranked by reduced-form profit.
    """
    if beta < 1:
        raise ValueError("beta must be >= 1")
    theta, mu, lam = params.theta, params.mu, params.lam

    if beta == 1.0:
        alpha = optimal_deployment(params)
        corner = lam * theta <= 1.0
        if alpha == 0.0:
            return BetaDeployment(alpha=0.0, profit=0.0, corner=corner, clamped=True)
        return BetaDeployment(
            alpha=alpha,
            profit=beta_reduced_profit(alpha, params, beta),
            corner=corner,
            clamped=False,
        )

    candidates: list[float] = []
    lo, hi = 1e-9, theta + mu
    n_scan = 200
    prev_a = lo
    prev_f = _beta_foc(prev_a, params, beta)
    for i in range(1, n_scan + 1):
        a = lo + (hi - lo) * i / n_scan
        f = _beta_foc(a, params, beta)
        if prev_f == 0.0:
            candidates.append(prev_a)
        elif prev_f * f < 0:
            root = bisect(lambda x: _beta_foc(x, params, beta), prev_a, a, tol=1e-10)
            candidates.append(root)
        prev_a, prev_f = a, f
    # interior FOC roots only make sense where defense is feasible
    candidates = [a for a in candidates if beta_interior_feasible(a, params, beta)]

    corner_vertex = mu + theta * (1.0 - lam)
    if corner_vertex > 0 and not beta_interior_feasible(corner_vertex, params, beta):
        candidates.append(corner_vertex)

    best_alpha, best_profit = 0.0, 0.0
    for a in candidates:
        value = beta_reduced_profit(a, params, beta)
        if value > best_profit:
            best_alpha, best_profit = a, value
    if best_alpha == 0.0:
        return BetaDeployment(alpha=0.0, profit=0.0, corner=True, clamped=True)
    return BetaDeployment(
        alpha=best_alpha,
        profit=best_profit,
        corner=not beta_interior_feasible(best_alpha, params, beta),
        clamped=False,
    )


def beta_sign_reversal(alpha: float, params: ModelParams, beta: float) -> bool:
    """Local sign-reversal predicate at an interior optimum alpha."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if beta < 1:
        raise ValueError("beta must be >= 1")
    lam, theta = params.lam, params.theta
    return (beta + 1.0) * alpha ** ((beta - 1.0) / 2.0) * math.sqrt(lam) / (
        2.0 * math.sqrt(theta)
    ) > 1.0


# --- endogenous governance investment --------------------------------------


def governance_marginal_value(lam: float, theta: float, mu: float) -> float:
    """Marginal firm value of reducing the loss magnitude, -V'(lam).

    alpha*(lam) * sqrt(theta / lam) in the interior regime, theta * alpha*
    at the corner; both branches agree at lam * theta = 1.
    """
    params = ModelParams(theta=theta, mu=mu, lam=lam)
    alpha = optimal_deployment(params)
    if lam * theta > 1.0:
        return alpha * math.sqrt(theta / lam)
    return theta * alpha


def solve_governance(
    lambda0: float, k: float, theta: float, mu: float
) -> GovernanceProblem:
    """Solve k * I = -V'(lambda0 - I) for the governance investment I.

    The right-hand side is piecewise-continuous across the regime switch at
    (lambda0 - I) * theta = 1, so the residual is scanned on a grid for sign
    changes before bisection.  The residual is negative at I = 0 (marginal
    value is strictly positive); if it never crosses zero before the
    lambda-floor, the solution is capped there and reported as such.
    """
    if lambda0 <= 0 or k <= 0:
        raise ValueError("lambda0 and k must be positive")
    if not lambda0 < mu + 1:
        raise ValueError(
            f"positive-deployment condition fails at lambda0 (lambda0={lambda0}, mu={mu})"
        )

    def residual(I: float) -> float:
        return k * I - governance_marginal_value(lambda0 - I, theta, mu)

    def invest_value(I: float) -> float:
        alpha = optimal_deployment(ModelParams(theta=theta, mu=mu, lam=lambda0 - I))
        return alpha * alpha / 2.0 - k * I * I / 2.0

    I_max = lambda0 - LAMBDA_FLOOR
    n_scan = 400
    grid = [I_max * i / n_scan for i in range(n_scan + 1)]
    roots: list[float] = []
    for a, b in zip(grid, grid[1:]):
        fa, fb = residual(a), residual(b)
        if fa == 0.0:
            roots.append(a)
        elif fa * fb < 0:
            roots.append(bisect(residual, a, b, tol=1e-12))
    capped = False
    if not roots:
        # marginal value still exceeds the marginal cost at the floor
        roots = [I_max]
        capped = True

    I_star = max(roots, key=invest_value)
    return GovernanceProblem(
        lambda0=lambda0,
        k=k,
        I_star=I_star,
        lambda_star=lambda0 - I_star,
        capped=capped or I_star == I_max,
    )
