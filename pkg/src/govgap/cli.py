"""Command-line interface.

Subcommands: solve, sweep, table, welfare, upgrade, ext, governance, verify.
All model parameters are settable by flags; an optional JSON config file
(--config) may supply the same keys, with flags taking precedence.  Exit
codes: 0 success, 2 usage error, 1 verification failure.

The environment variable GOVGAP_SEED is reserved for future use and is
currently ignored: the model and the verification oracle are fully
deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Optional

import govgap
from govgap import emit as emit_mod
from govgap import extensions as ext_mod
from govgap.capability import upgrade_decision
from govgap.model import ModelParams, solve
from govgap.objectives import baseline_objective, beta_objective
from govgap.oracle import default_grid, maximize_profit
from govgap.sweep import sweep as run_sweep
from govgap.tables import TABLE_IDS, reproduce_table
from govgap.welfare import assess

PARAM_KEYS = (
    "theta",
    "mu",
    "lam",
    "e",
    "gamma",
    "beta",
    "eta",
    "omega",
    "k",
    "lambda0",
)

DEFAULTS = {"theta": 2.0, "mu": 2.0, "lam": 1.0, "gamma": 1.0, "beta": 1.0,
            "eta": 1.0, "omega": 0.0}


class UsageError(Exception):
    pass


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--theta", type=float, default=None)
    parser.add_argument("--mu", type=float, default=None)
    parser.add_argument("--lambda", dest="lam", type=float, default=None)
    parser.add_argument("--e", type=float, default=None)
    parser.add_argument("--gamma", type=float, default=None)
    parser.add_argument("--beta", type=float, default=None)
    parser.add_argument("--eta", type=float, default=None)
    parser.add_argument("--omega", type=float, default=None)
    parser.add_argument("--k", type=float, default=None)
    parser.add_argument("--lambda0", type=float, default=None)
    parser.add_argument("--config", type=str, default=None,
                        help="JSON file with the same keys as the flags")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    parser.add_argument("--out", type=str, default=None)
    parser.add_argument("--fig", type=str, default=None,
                        help="also render the chart to an image file")


def _merged_params(args: argparse.Namespace) -> dict:
    """Config-file values overridden by flags, then filled with defaults."""
    merged = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                file_values = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file {args.config!r}: {exc}")
        if not isinstance(file_values, dict):
            raise UsageError(f"config file {args.config!r} must hold a JSON object")
        alias = {"lambda": "lam"}
        for key, value in file_values.items():
            key = alias.get(key, key)
            if key not in PARAM_KEYS:
                raise UsageError(f"unknown config key {key!r}")
            merged[key] = float(value)
    for key in PARAM_KEYS:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = flag_value
    return merged


def _print_row(row: dict) -> None:
    for key, value in row.items():
        print(f"{key}: {value}")


def _deliver(report: dict, args: argparse.Namespace) -> None:
    if getattr(args, "out", None):
        emit_mod.emit(report, args.format, args.out)
    else:
        for row in report["rows"]:
            _print_row(row)
            print()
    if getattr(args, "fig", None):
        emit_mod.render_figure(report, args.fig)


def _single_row_report(row: dict, **meta) -> dict:
    return {
        "meta": {"version": govgap.__version__, **meta},
        "columns": list(row.keys()),
        "rows": [row],
        "series": [],
    }


def _cmd_solve(args: argparse.Namespace) -> int:
    p = _merged_params(args)
    sol = solve(ModelParams(theta=p["theta"], mu=p["mu"], lam=p["lam"]))
    row = asdict(sol)
    row["regime"] = sol.regime.value
    _deliver(_single_row_report(row, theta=p["theta"], mu=p["mu"], lam=p["lam"]), args)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    p = _merged_params(args)
    config = None
    if any(p.get(k, DEFAULTS[k]) != DEFAULTS[k] for k in ("gamma", "beta", "eta", "omega")):
        config = ext_mod.ExtensionConfig(
            gamma=p["gamma"], beta=p["beta"], eta=p["eta"], omega=p["omega"]
        )
    result = run_sweep(
        axis=args.axis,
        lo=args.lo,
        hi=args.hi,
        n=args.n,
        theta=p["theta"],
        mu=p["mu"],
        lam=p["lam"],
        e=p.get("e"),
        config=config,
    )
    report = emit_mod.sweep_report(result, theta=p["theta"], mu=p["mu"], lam=p["lam"])
    _deliver(report, args)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    table = reproduce_table(args.id)
    _deliver(emit_mod.table_report(table), args)
    return 0


def _cmd_welfare(args: argparse.Namespace) -> int:
    p = _merged_params(args)
    if p.get("e") is None:
        raise UsageError("welfare requires --e (or an 'e' config entry)")
    wa = assess(ModelParams(theta=p["theta"], mu=p["mu"], lam=p["lam"]), e=p["e"])
    _deliver(_single_row_report(asdict(wa), theta=p["theta"], mu=p["mu"],
                                lam=p["lam"], e=p["e"]), args)
    return 0


def _cmd_upgrade(args: argparse.Namespace) -> int:
    p = _merged_params(args)
    dec = upgrade_decision(args.theta_l, args.theta_f, mu=p["mu"], lam=p["lam"])
    _deliver(_single_row_report(asdict(dec), mu=p["mu"], lam=p["lam"]), args)
    return 0


def _cmd_ext(args: argparse.Namespace) -> int:
    p = _merged_params(args)
    config = ext_mod.ExtensionConfig(
        gamma=p["gamma"], beta=p["beta"], eta=p["eta"], omega=p["omega"]
    )
    params = ModelParams(theta=p["theta"], mu=p["mu"], lam=p["lam"])
    if config.beta != 1.0:
        sol = ext_mod.beta_optimal_deployment(params, config.beta)
        row = {"variant": "beta", "beta": config.beta, **asdict(sol)}
    elif config.gamma != 1.0:
        row = {
            "variant": "gamma",
            "gamma": config.gamma,
            "alpha_star": ext_mod.alpha_star_gamma(params, config.gamma),
            "clamped": ext_mod.gamma_clamped(params, config.gamma),
            "paradox_active": ext_mod.gamma_paradox_active(params, config.gamma),
        }
    elif config.eta != 1.0:
        row = {
            "variant": "eta",
            "eta": config.eta,
            "alpha_star": ext_mod.alpha_star_eta(params, config.eta),
            "clamped": ext_mod.eta_clamped(params, config.eta),
            "paradox_active": ext_mod.eta_paradox_active(params, config.eta),
        }
    elif config.omega != 0.0:
        row = {
            "variant": "omega",
            "omega": config.omega,
            "alpha_star": ext_mod.alpha_star_omega(params, config.omega),
            "clamped": ext_mod.omega_clamped(params, config.omega),
            "paradox_active": ext_mod.omega_paradox_active(params, config.omega),
        }
    else:
        sol = solve(params)
        row = {"variant": "baseline", "alpha_star": sol.alpha_star,
               "d_star": sol.d_star, "p_star": sol.p_star}
    _deliver(_single_row_report(row, theta=p["theta"], mu=p["mu"], lam=p["lam"]), args)
    return 0


def _cmd_governance(args: argparse.Namespace) -> int:
    p = _merged_params(args)
    if p.get("lambda0") is None or p.get("k") is None:
        raise UsageError("governance requires --lambda0 and --k")
    gov = ext_mod.solve_governance(
        lambda0=p["lambda0"], k=p["k"], theta=p["theta"], mu=p["mu"]
    )
    _deliver(_single_row_report(asdict(gov), theta=p["theta"], mu=p["mu"]), args)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    """Closed forms vs brute-force oracle on a deterministic point battery."""
    import numpy as np

    rng = np.random.default_rng(20240488)
    failures = []
    n_base = args.points

    for _ in range(n_base):
        theta = float(rng.uniform(0.2, 5.0))
        mu = float(rng.uniform(0.2, 5.0))
        lam = float(rng.uniform(0.1, min(3.0, mu + 0.99)))
        params = ModelParams(theta=theta, mu=mu, lam=lam)
        sol = solve(params)
        oracle = maximize_profit(
            baseline_objective(theta, mu, lam), default_grid(theta, mu)
        )
        gap_alpha = abs(sol.alpha_star - oracle.alpha_hat)
        gap_profit = sol.profit - oracle.value_hat
        if gap_alpha > 1e-4 or gap_profit < -1e-8:
            failures.append(
                f"baseline theta={theta:.4f} mu={mu:.4f} lam={lam:.4f}: "
                f"|dalpha|={gap_alpha:.2e}, profit gap={gap_profit:.2e}"
            )

    for beta in (1.25, 1.5, 2.0):
        for _ in range(max(1, n_base // 10)):
            theta = float(rng.uniform(0.2, 4.0))
            mu = float(rng.uniform(0.2, 4.0))
            lam = float(rng.uniform(0.1, min(3.0, mu + 0.99)))
            params = ModelParams(theta=theta, mu=mu, lam=lam)
            sol = ext_mod.beta_optimal_deployment(params, beta)
            oracle = maximize_profit(
                beta_objective(theta, mu, lam, beta), default_grid(theta, mu)
            )
            gap_alpha = abs(sol.alpha - oracle.alpha_hat)
            if gap_alpha > 1e-3:
                failures.append(
                    f"beta={beta} theta={theta:.4f} mu={mu:.4f} lam={lam:.4f}: "
                    f"|dalpha|={gap_alpha:.2e}"
                )

    if failures:
        for line in failures:
            print(f"FAIL {line}", file=sys.stderr)
        print(f"verification FAILED ({len(failures)} mismatches)", file=sys.stderr)
        return 1
    print(f"verification passed ({n_base} baseline points, "
          f"3 x {max(1, n_base // 10)} beta points)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="govgap",
        description="Deterministic deployment/security model: closed forms, "
        "welfare benchmarks, calibration tables, and a verification oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _add_param_flags(p)
        _add_output_flags(p)
        p.set_defaults(func=func)
        return p

    add("solve", _cmd_solve, "private optimum at one parameter point")

    p_sweep = add("sweep", _cmd_sweep, "solve on a grid over theta or lambda")
    p_sweep.add_argument("--axis", choices=("theta", "lambda"), required=True)
    p_sweep.add_argument("--lo", type=float, required=True)
    p_sweep.add_argument("--hi", type=float, required=True)
    p_sweep.add_argument("--n", type=int, required=True)

    p_table = add("table", _cmd_table, "reproduce a bundled calibration table")
    p_table.add_argument("--id", choices=TABLE_IDS, required=True)

    add("welfare", _cmd_welfare, "first/second-best benchmarks at one point")

    p_up = add("upgrade", _cmd_upgrade, "legacy-vs-frontier capability choice")
    p_up.add_argument("--theta-l", dest="theta_l", type=float, required=True)
    p_up.add_argument("--theta-f", dest="theta_f", type=float, required=True)

    add("ext", _cmd_ext, "generalized variant at one point")
    add("governance", _cmd_governance, "endogenous governance investment")

    p_verify = add("verify", _cmd_verify, "closed forms vs brute-force oracle")
    p_verify.add_argument("--points", type=int, default=100,
                          help="number of baseline sample points")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
