"""Parameter sweeps, report assembly, and file emission."""

import json

import numpy as np
import pytest

from govgap.emit import (
    emit,
    emit_csv,
    emit_json,
    emit_svg,
    render_figure,
    sweep_report,
    table_report,
)
from govgap.extensions import ExtensionConfig
from govgap.model import ModelParams, deployment_slope
from govgap.sweep import sweep
from govgap.tables import reproduce_table


class TestSweep:
    def test_validation(self):
        with pytest.raises(ValueError):
            sweep("rho", 0, 1, 5, theta=2, mu=2, lam=1)
        with pytest.raises(ValueError):
            sweep("theta", 2, 1, 5, theta=2, mu=2, lam=1)
        with pytest.raises(ValueError):
            sweep("theta", 0.5, 5, 1, theta=2, mu=2, lam=1)

    def test_points_strictly_increasing(self):
        result = sweep("theta", 0.5, 5, 20, theta=2, mu=2, lam=1.25)
        values = [p.value for p in result.points]
        assert values == sorted(values)
        assert len(set(values)) == len(values)

    def test_minimum_at_turning_point(self):
        result = sweep("theta", 0.5, 5, 10, theta=2, mu=2, lam=2.0)
        assert result.min_point.value == pytest.approx(2.0, abs=1e-12)
        assert result.min_point.alpha_star == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("lam", [1.14, 1.5, 2.2])
    def test_minimum_within_one_grid_step(self, lam):
        n = 97
        result = sweep("theta", 0.3, 5, n, theta=2, mu=2, lam=lam)
        step = (5 - 0.3) / (n - 1)
        assert abs(result.min_point.value - lam) <= step + 1e-12

    def test_lambda_sweep_strictly_decreasing(self):
        result = sweep("lambda", 0.2, 2.5, 30, theta=2, mu=2, lam=1)
        alphas = [p.alpha_star for p in result.points]
        assert all(a > b for a, b in zip(alphas, alphas[1:]))

    def test_externality_overlay_flags(self):
        result = sweep("theta", 0.5, 3, 251, theta=2, mu=2, lam=1.14, e=0.5)
        # private paradox flag flips at theta = lam, SB flag at ~1.78
        private_flip = min(p.value for p in result.points if not p.paradox_active)
        sb_flip = min(p.value for p in result.points if not p.sb_paradox)
        assert private_flip == pytest.approx(1.14, abs=0.011)
        assert sb_flip == pytest.approx(1.78, abs=0.011)

    def test_extension_config_sweep(self):
        config = ExtensionConfig(gamma=0.0)
        result = sweep("theta", 0.5, 5, 20, theta=2, mu=2, lam=0.8, config=config)
        alphas = [p.alpha_star for p in result.points]
        assert all(b >= a for a, b in zip(alphas, alphas[1:]))

    def test_overlay_and_config_exclusive(self):
        with pytest.raises(ValueError):
            sweep("theta", 0.5, 5, 5, theta=2, mu=2, lam=1, e=0.5,
                  config=ExtensionConfig(beta=1.5))

    def test_paradox_heatmap_boundary(self):
        # on a (theta, lam) grid the slope-sign boundary tracks theta = lam
        thetas = np.linspace(0.2, 3.0, 57)
        cell = thetas[1] - thetas[0]
        for lam in np.linspace(1.05, 2.8, 12):
            lam = float(lam)
            flags = [
                deployment_slope(ModelParams(theta=float(t), mu=2, lam=lam)) < 0
                for t in thetas
            ]
            flipped = [t for t, f in zip(thetas, flags) if not f]
            assert flipped, f"no positive-slope cell for lam={lam}"
            boundary = min(flipped)
            assert abs(boundary - lam) <= cell + 1e-12


class TestEmit:
    @pytest.fixture
    def report(self):
        result = sweep("theta", 0.5, 5, 12, theta=2, mu=2, lam=1.25, e=0.5)
        return sweep_report(result, theta=2, mu=2, lam=1.25, e=0.5)

    def test_json_round_trip(self, report, tmp_path):
        path = tmp_path / "out.json"
        emit_json(report, str(path))
        parsed = json.loads(path.read_text())
        assert parsed["meta"] == report["meta"]
        assert parsed["rows"] == report["rows"]
        assert len(parsed["rows"]) == 12

    def test_csv_structure_t4(self, tmp_path):
        path = tmp_path / "t4.csv"
        emit_csv(table_report(reproduce_table("T4")), str(path))
        lines = path.read_text().strip().splitlines()
        assert len(lines) == 5  # header + 4 industries
        assert all(len(line.split(",")) == 8 for line in lines)

    def test_csv_uses_dot_decimal(self, report, tmp_path):
        path = tmp_path / "s.csv"
        emit_csv(report, str(path))
        body = path.read_text()
        assert "." in body and ";" not in body

    def test_svg_one_polyline_per_series(self, report, tmp_path):
        path = tmp_path / "s.svg"
        emit_svg(report, str(path))
        body = path.read_text()
        assert body.count("<polyline") == len(report["series"]) == 2
        assert "theta" in body and "deployment" in body

    def test_svg_requires_series(self, tmp_path):
        with pytest.raises(ValueError):
            emit_svg(table_report(reproduce_table("T4")), str(tmp_path / "x.svg"))

    def test_dispatch_rejects_unknown_format(self, report, tmp_path):
        with pytest.raises(ValueError):
            emit(report, "xml", str(tmp_path / "x.xml"))

    def test_io_error_names_path(self, report):
        with pytest.raises(OSError, match="/nonexistent-dir/out.csv"):
            emit_csv(report, "/nonexistent-dir/out.csv")

    def test_render_figure(self, report, tmp_path):
        path = tmp_path / "fig.png"
        render_figure(report, str(path))
        assert path.stat().st_size > 0
