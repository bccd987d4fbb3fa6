"""Deterministic library for the governance-capability-gap AI deployment model.

Closed-form private optima, welfare benchmarks, capability-upgrade decisions,
extension variants, and an independent brute-force oracle that every closed
form is verified against.
"""

from govgap.model import (
    FirmSolution,
    ModelParams,
    Regime,
    breach_probability,
    classify_regime,
    deployment_slope,
    equilibrium_breach_prob,
    lambda_slope,
    optimal_defense,
    optimal_deployment,
    profit,
    reduced_profit,
    security_discount,
    solve,
)
from govgap.welfare import (
    Externality,
    ParadoxThresholds,
    WelfareAssessment,
    assess,
    discount_functions,
    fb_welfare_objective,
    first_best_deployment,
    paradox_thresholds,
    sb_welfare_objective,
    second_best_deployment,
)
from govgap.capability import (
    UpgradeDecision,
    firm_value_at,
    frontier_threshold,
    upgrade_decision,
)
from govgap.extensions import (
    BetaDeployment,
    ExtensionConfig,
    GovernanceProblem,
    alpha_star_eta,
    alpha_star_gamma,
    alpha_star_omega,
    beta_defense,
    beta_equilibrium_prob,
    beta_optimal_deployment,
    beta_sign_reversal,
    governance_marginal_value,
    solve_governance,
)
from govgap.oracle import (
    GridSpec,
    OracleResult,
    bisect,
    central_difference,
    maximize_1d,
    maximize_profit,
)
from govgap.calibration import IndustryCalibration, builtin_calibration

__version__ = "0.1.0"

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
    "security_discount",
    "deployment_slope",
    "lambda_slope",
    "solve",
    "Externality",
    "WelfareAssessment",
    "ParadoxThresholds",
    "first_best_deployment",
    "second_best_deployment",
    "sb_welfare_objective",
    "fb_welfare_objective",
    "paradox_thresholds",
    "discount_functions",
    "assess",
    "UpgradeDecision",
    "firm_value_at",
    "upgrade_decision",
    "frontier_threshold",
    "ExtensionConfig",
    "BetaDeployment",
    "GovernanceProblem",
    "alpha_star_gamma",
    "alpha_star_eta",
    "alpha_star_omega",
    "beta_defense",
    "beta_equilibrium_prob",
    "beta_optimal_deployment",
    "beta_sign_reversal",
    "governance_marginal_value",
    "solve_governance",
    "GridSpec",
    "OracleResult",
    "maximize_profit",
    "maximize_1d",
    "central_difference",
    "bisect",
    "IndustryCalibration",
    "builtin_calibration",
]
