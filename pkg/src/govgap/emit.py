"""Report assembly and file output (CSV, JSON, SVG, PNG figures).

A report is a plain dict with keys ``meta`` (parameters and package
version), ``columns``, ``rows`` (list of dicts), and optionally ``series``
(list of named x/y traces) plus ``xlabel``/``ylabel``/``title`` for chart
output.  All numbers are computed upstream; this module is presentation
only.
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict

import govgap
from govgap.sweep import SweepResult
from govgap.tables import Table

__all__ = [
    "sweep_report",
    "table_report",
    "emit",
    "emit_csv",
    "emit_json",
    "emit_svg",
    "render_figure",
]


def _meta(**params) -> dict:
    return {"version": govgap.__version__, **params}


def sweep_report(result: SweepResult, **params) -> dict:
    """Build a report dict from a sweep, with one chart trace per series."""
    rows = [asdict(p) for p in result.points]
    columns = [k for k in rows[0] if rows[0][k] is not None or k in ("value",)]
    rows = [{k: r[k] for k in columns} for r in rows]
    x = [r["value"] for r in rows]
    series = [{"label": "alpha_star", "x": x, "y": [r["alpha_star"] for r in rows]}]
    if "alpha_sb" in columns:
        series.append({"label": "alpha_sb", "x": x, "y": [r["alpha_sb"] for r in rows]})
    return {
        "meta": _meta(axis=result.axis, min_index=result.min_index, **params),
        "columns": columns,
        "rows": rows,
        "series": series,
        "xlabel": result.axis,
        "ylabel": "deployment",
        "title": f"optimal deployment vs {result.axis}",
    }


def table_report(table: Table, **params) -> dict:
    """Build a report dict from a reproduced table (no chart series)."""
    return {
        "meta": _meta(table=table.id, **params),
        "columns": list(table.columns),
        "rows": table.rows,
        "series": [],
    }


def _open_for_write(path: str):
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise OSError(f"cannot write output file {path!r}: {exc}") from exc


def emit_csv(report: dict, path: str) -> None:
    """Header row then data rows; '.' decimal point, locale-independent."""
    with _open_for_write(path) as fh:
        writer = csv.writer(fh)
        writer.writerow(report["columns"])
        for row in report["rows"]:
            writer.writerow([repr(row[c]) if isinstance(row[c], float) else row[c]
                             for c in report["columns"]])


def emit_json(report: dict, path: str) -> None:
    """One object with ``meta`` and ``rows``; parses back to equal values."""
    payload = {"meta": report["meta"], "rows": report["rows"]}
    with _open_for_write(path) as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _svg_scale(values: list[float], lo_px: float, hi_px: float):
    v_lo, v_hi = min(values), max(values)
    span = (v_hi - v_lo) or 1.0

    def to_px(v: float) -> float:
        return lo_px + (v - v_lo) / span * (hi_px - lo_px)

    return to_px


def emit_svg(report: dict, path: str) -> None:
    """Single chart with one <polyline> per series and axis labels."""
    series = report.get("series") or []
    if not series:
        raise ValueError("report has no chart series; SVG output needs a sweep")
    width, height, margin = 640, 420, 60
    xs = [v for s in series for v in s["x"]]
    ys = [v for s in series for v in s["y"]]
    x_px = _svg_scale(xs, margin, width - margin)
    y_px = _svg_scale(ys, height - margin, margin)  # SVG y grows downward
    palette = ["#1f6fb4", "#c0392b", "#1e8449", "#8e44ad"]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<text x="{width / 2:.1f}" y="{height - margin / 3:.1f}" '
        f'text-anchor="middle">{report.get("xlabel", "")}</text>',
        f'<text x="{margin / 3:.1f}" y="{height / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 {margin / 3:.1f} {height / 2:.1f})">'
        f'{report.get("ylabel", "")}</text>',
        f'<text x="{width / 2:.1f}" y="{margin / 2:.1f}" '
        f'text-anchor="middle">{report.get("title", "")}</text>',
    ]
    for i, s in enumerate(series):
        pts = " ".join(
            f"{x_px(x):.2f},{y_px(y):.2f}" for x, y in zip(s["x"], s["y"])
        )
        color = palette[i % len(palette)]
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
            f'points="{pts}"/>'
        )
        parts.append(
            f'<text x="{width - margin + 5}" y="{margin + 16 * i}" '
            f'fill="{color}" font-size="11">{s["label"]}</text>'
        )
    parts.append("</svg>")
    with _open_for_write(path) as fh:
        fh.write("\n".join(parts) + "\n")


def render_figure(report: dict, path: str) -> None:
    """Render the report's series to an image file with matplotlib."""
    series = report.get("series") or []
    if not series:
        raise ValueError("report has no chart series; figure output needs a sweep")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for s in series:
        ax.plot(s["x"], s["y"], label=s["label"])
    ax.set_xlabel(report.get("xlabel", ""))
    ax.set_ylabel(report.get("ylabel", ""))
    ax.set_title(report.get("title", ""))
    ax.legend()
    fig.tight_layout()
    try:
        fig.savefig(path)
    except OSError as exc:
        raise OSError(f"cannot write figure file {path!r}: {exc}") from exc
    finally:
        plt.close(fig)


def emit(report: dict, fmt: str, path: str) -> None:
    """Dispatch on format: csv | json | svg."""
    writers = {"csv": emit_csv, "json": emit_json, "svg": emit_svg}
    if fmt not in writers:
        raise ValueError(f"unknown format {fmt!r}; expected csv, json, or svg")
    writers[fmt](report, path)
