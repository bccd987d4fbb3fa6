"""Reproduction of the bundled calibration tables.

Four tables, all at mu = 2 and (unless the table sweeps capability)
theta = 2:

* T3 - capability upgrade decisions (legacy theta 0.5 vs frontier theta 2);
* T4 - private optimum across industries;
* T5 - optimal deployment across capability levels, with paradox (bold) and
  corner (dagger) flags;
* T6 - private vs second-best deployment under each industry's externality.
"""

from __future__ import annotations

from dataclasses import dataclass

from govgap.calibration import IndustryCalibration, builtin_calibration
from govgap.capability import upgrade_decision
from govgap.model import ModelParams, solve
from govgap.welfare import assess

__all__ = ["Table", "TABLE_IDS", "T5_THETA_GRID", "reproduce_table"]

TABLE_IDS = ("T3", "T4", "T5", "T6")
T5_THETA_GRID = (0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0)

_THETA = 2.0
_MU = 2.0
_THETA_LEGACY = 0.5


@dataclass(frozen=True)
class Table:
    id: str
    columns: tuple[str, ...]
    rows: list[dict]


def _t3_rows(industries: list[IndustryCalibration]) -> list[dict]:
    rows = []
    for ind in industries:
        dec = upgrade_decision(_THETA_LEGACY, _THETA, mu=_MU, lam=ind.lam)
        rows.append(
            {
                "industry": ind.name,
                "lam": ind.lam,
                "V_legacy": dec.V_L,
                "V_frontier": dec.V_F,
                "adopt": dec.adopt,
            }
        )
    return rows


def _t4_rows(industries: list[IndustryCalibration]) -> list[dict]:
    rows = []
    for ind in industries:
        sol = solve(ModelParams(theta=_THETA, mu=_MU, lam=ind.lam))
        rows.append(
            {
                "industry": ind.name,
                "lam": ind.lam,
                "alpha0": sol.alpha0,
                "alpha_star": sol.alpha_star,
                "d_star": sol.d_star,
                "p_star": sol.p_star,
                "admits_paradox": ind.lam > 1.0,
                "active_paradox": _THETA < ind.lam,
            }
        )
    return rows


def _t5_rows(industries: list[IndustryCalibration]) -> list[dict]:
    rows = []
    for ind in industries:
        for theta in T5_THETA_GRID:
            sol = solve(ModelParams(theta=theta, mu=_MU, lam=ind.lam))
            rows.append(
                {
                    "industry": ind.name,
                    "lam": ind.lam,
                    "theta": theta,
                    "alpha_star": sol.alpha_star,
                    "paradox": ind.lam > 1.0 and theta < ind.lam,
                    "corner": ind.lam * theta <= 1.0,
                }
            )
    return rows


def _t6_rows(industries: list[IndustryCalibration]) -> list[dict]:
    rows = []
    for ind in industries:
        wa = assess(ModelParams(theta=_THETA, mu=_MU, lam=ind.lam), e=ind.default_e)
        rows.append(
            {
                "industry": ind.name,
                "lam": ind.lam,
                "e": ind.default_e,
                "alpha_star": wa.alpha_private,
                "alpha_fb": wa.alpha_fb,  # model-derived, not a published column
                "alpha_sb": wa.alpha_sb,
                "sb_clamped": wa.sb_clamped,
                "social_paradox_region": (1.0 + ind.default_e) * ind.lam > 1.0,
            }
        )
    return rows


def reproduce_table(table_id: str) -> Table:
    if table_id not in TABLE_IDS:
        raise ValueError(f"unknown table id {table_id!r}; expected one of {TABLE_IDS}")
    industries = builtin_calibration()
    builders = {"T3": _t3_rows, "T4": _t4_rows, "T5": _t5_rows, "T6": _t6_rows}
    rows = builders[table_id](industries)
    return Table(id=table_id, columns=tuple(rows[0].keys()), rows=rows)
