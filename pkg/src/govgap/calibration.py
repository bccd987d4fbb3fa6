"""Built-in industry calibration.

Breach-cost figures (million USD, IBM 2024 survey) are mapped to the loss
index by normalizing the global average cost ($4.88M) to 1.  The index
values are stored at the 2-decimal fidelity the published tables print,
because all downstream table values are computed from the rounded numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["IndustryCalibration", "builtin_calibration", "GLOBAL_AVG_BREACH_COST"]

GLOBAL_AVG_BREACH_COST = 4.88


@dataclass(frozen=True)
class IndustryCalibration:
    name: str
    breach_cost_musd: float
    lam: float
    default_e: float


def builtin_calibration() -> list[IndustryCalibration]:
    """The four bundled industries, ordered by loss magnitude."""
    return [
        IndustryCalibration("Retail", 3.48, 0.71, 0.3),
        IndustryCalibration("Industrial", 5.56, 1.14, 0.5),
        IndustryCalibration("Financial Services", 6.08, 1.25, 1.0),
        IndustryCalibration("Healthcare", 9.77, 2.00, 1.5),
    ]
