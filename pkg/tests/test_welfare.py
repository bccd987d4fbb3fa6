"""Welfare benchmarks: FB/SB optima, dominance, and paradox-region expansion."""

import math

import numpy as np
import pytest

from govgap.model import ModelParams, optimal_deployment
from govgap.objectives import planner_objective
from govgap.oracle import default_grid, maximize_1d, maximize_profit
from govgap.welfare import (
    Externality,
    assess,
    discount_functions,
    first_best_deployment,
    paradox_thresholds,
    sb_welfare_objective,
    second_best_deployment,
)


def params(theta, mu, lam):
    return ModelParams(theta=theta, mu=mu, lam=lam)


class TestExternality:
    def test_scale(self):
        assert Externality(0.5).E == 1.5

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Externality(-0.1)


class TestFirstBest:
    def test_zero_externality_collapse(self):
        rng = np.random.default_rng(41)
        for _ in range(50):
            p = params(*(float(v) for v in rng.uniform(0.3, 3.0, size=3)))
            assert first_best_deployment(p, 0.0) == optimal_deployment(p)

    def test_healthcare_clamp(self):
        assert first_best_deployment(params(2, 2, 2), 1.5) == 0.0

    def test_retail_interior(self):
        assert first_best_deployment(params(2, 2, 0.71), 0.3) == pytest.approx(
            5 - 2 * math.sqrt(1.846), abs=1e-9
        )

    def test_equals_private_with_scaled_lambda(self):
        # joint planner control is the private problem at (1+e)*lam throughout
        rng = np.random.default_rng(43)
        for _ in range(100):
            theta, mu, lam = (float(v) for v in rng.uniform(0.3, 3.0, size=3))
            e = float(rng.uniform(0.0, 2.0))
            assert first_best_deployment(params(theta, mu, lam), e) == pytest.approx(
                optimal_deployment(params(theta, mu, (1 + e) * lam)), abs=1e-12
            )

    def test_oracle_equivalence(self):
        cases = [(2, 2, 0.71, 0.3), (2, 2, 1.14, 0.5), (1.5, 2, 1.25, 1.0), (3, 1.5, 0.5, 0.8)]
        for theta, mu, lam, e in cases:
            hat = maximize_profit(
                planner_objective(theta, mu, lam, e), default_grid(theta, mu)
            )
            assert abs(hat.alpha_hat - first_best_deployment(params(theta, mu, lam), e)) <= 1e-4


class TestSecondBest:
    def test_table_points(self):
        assert second_best_deployment(params(2, 2, 1.25), 1.0) == pytest.approx(
            5 - 3 * math.sqrt(2.5), abs=1e-12
        )
        assert second_best_deployment(params(2, 2, 2.0), 1.5) == 0.0

    def test_zero_externality_collapse(self):
        rng = np.random.default_rng(47)
        for _ in range(50):
            p = params(*(float(v) for v in rng.uniform(0.3, 3.0, size=3)))
            assert second_best_deployment(p, 0.0) == optimal_deployment(p)

    def test_regime_split_is_private(self):
        # just inside the private corner the corner branch applies for any e
        p = params(0.9, 2, 1.1)  # lam*theta = 0.99 <= 1
        e = 2.0
        expected = p.mu + p.theta * (1 - (1 + e) * p.lam)
        assert second_best_deployment(p, e) == pytest.approx(max(0.0, expected), abs=1e-12)

    def test_objective_peak(self):
        p = params(2, 2, 1.14)
        alpha_sb = second_best_deployment(p, 0.5)
        assert sb_welfare_objective(alpha_sb, p, 0.5) == pytest.approx(
            alpha_sb**2 / 2, abs=1e-12
        )
        # private deployment is dominated under the social objective
        alpha_private = optimal_deployment(p)
        assert sb_welfare_objective(alpha_private, p, 0.5) < sb_welfare_objective(
            alpha_sb, p, 0.5
        )

    def test_oracle_equivalence(self):
        rng = np.random.default_rng(53)
        for _ in range(50):
            theta, mu, lam = (float(v) for v in rng.uniform(0.3, 3.0, size=3))
            e = float(rng.uniform(0.0, 2.0))
            p = params(theta, mu, lam)
            x_hat, _ = maximize_1d(
                lambda a: np.array([sb_welfare_objective(float(v), p, e) for v in np.atleast_1d(a)]),
                0.0,
                theta + mu,
            )
            assert abs(x_hat - second_best_deployment(p, e)) <= 1e-6


class TestOrderingAndRegions:
    def test_deployment_ordering(self):
        rng = np.random.default_rng(59)
        for _ in range(300):
            p = params(*(float(v) for v in rng.uniform(0.3, 3.0, size=3)))
            e = float(rng.uniform(0.0, 2.0))
            wa = assess(p, e)
            assert wa.alpha_sb <= wa.alpha_fb + 1e-12
            assert wa.alpha_fb <= wa.alpha_private + 1e-12

    def test_threshold_expansion(self):
        rng = np.random.default_rng(61)
        for _ in range(200):
            lam = float(rng.uniform(0.1, 3.0))
            e = float(rng.uniform(1e-6, 2.0))
            t = paradox_thresholds(lam, e)
            assert t.sb > t.fb > t.private

    def test_known_thresholds(self):
        t = paradox_thresholds(1.14, 0.5)
        assert t.sb == pytest.approx(1.781, abs=5e-4)
        t0 = paradox_thresholds(2.0, 0.0)
        assert t0.private == t0.fb == t0.sb == 2.0
        t1 = paradox_thresholds(1.25, 1.0)
        assert t1.fb == pytest.approx(2.5, abs=1e-12)
        assert t1.sb == pytest.approx(2.8125, abs=1e-12)

    def test_wedge_point(self):
        # theta = 1.5 escapes the private paradox but not the second-best one
        wa = assess(params(1.5, 2, 1.14), 0.5)
        assert not wa.in_private_paradox
        assert wa.in_sb_paradox

    def test_healthcare_clamp_flag(self):
        wa = assess(params(2, 2, 2.0), 1.5)
        assert wa.alpha_sb == 0.0
        assert wa.sb_clamped


class TestDiscountFunctions:
    def test_boundary_coincidence(self):
        assert discount_functions(1.0, 0.0) == (1.0, 1.0, 1.0)

    def test_interior_values(self):
        H, S, HE = discount_functions(4.0, 1.0)
        assert H == 3.0
        assert S == 5.0
        assert HE == pytest.approx(2 * math.sqrt(8) - 1, abs=1e-12)

    def test_corner_equality_case(self):
        H, S, HE = discount_functions(0.5, 0.5)
        assert S == 0.75
        assert HE == 0.75

    def test_dominance_identity(self):
        rng = np.random.default_rng(67)
        for _ in range(1000):
            x = float(rng.uniform(1e-3, 6.0))
            e = float(rng.uniform(0.01, 2.0))
            _, S, HE = discount_functions(x, e)
            assert S - HE >= -1e-12
            if x <= 1.0 and (1 + e) * x <= 1.0:
                assert S == HE  # both sides reduce to E*x exactly
            if x > 1.001 or (1 + e) * x > 1.001:
                assert S - HE > 0.0
