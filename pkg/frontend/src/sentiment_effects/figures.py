"""Figure rendering for decomposition sweep files.

Inputs are the files the core CLI writes: CSV with ``# key=value``
parameter comments followed by a header row, or the equivalent JSON object
with ``"params"`` and ``"rows"``. A figure is a horizontal row of panels,
one per sweep file, and all files in one figure must come from the same
core command:

- ``gates``: component value against the input probability, one line per
  antichain.
- ``ca``: one bar per antichain, mean with a std error bar.
- ``chemical``: component value against the interaction rate, log x axis.
- ``decompose``: box plots of each antichain's component across contexts.

The output format follows the output path's extension (png, pdf, svg, or
anything else the backend accepts).
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # render headless; must precede pyplot import

import matplotlib.pyplot as plt

from .errors import SweepFormatError


def read_sweep(path) -> tuple[dict, list[dict]]:
    """Parse one sweep file into ``(params, rows)``; detects CSV vs JSON."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        params = doc.get("params")
        rows = doc.get("rows")
        if not isinstance(params, dict) or not isinstance(rows, list):
            raise SweepFormatError(f"{path}: JSON sweep needs 'params' and 'rows' entries")
        if not rows:
            raise SweepFormatError(f"{path}: no data rows")
        return dict(params), [dict(row) for row in rows]
    params = {}
    lines = text.splitlines()
    pos = 0
    while pos < len(lines) and lines[pos].startswith("#"):
        key, eq, value = lines[pos][1:].strip().partition("=")
        if eq:
            params[key.strip()] = value.strip()
        pos += 1
    rows = list(csv.DictReader(io.StringIO("\n".join(lines[pos:]))))
    if not rows:
        raise SweepFormatError(f"{path}: no data rows")
    return params, rows


def _require_columns(path, rows: list[dict], columns: tuple[str, ...]) -> None:
    missing = [c for c in columns if c not in rows[0]]
    if missing:
        raise SweepFormatError(f"{path}: missing columns {', '.join(missing)}")


def _series(rows: list[dict], x_col: str, y_col: str) -> dict[str, tuple[list, list]]:
    """Per-antichain (x, y) lists, labels in first-seen order."""
    out: dict[str, tuple[list, list]] = {}
    for row in rows:
        xs, ys = out.setdefault(str(row["antichain"]), ([], []))
        xs.append(float(row[x_col]))
        ys.append(float(row[y_col]))
    return out


def _panel_gates(ax, path, params, rows) -> None:
    _require_columns(path, rows, ("gate", "p", "antichain", "partial"))
    for label, (xs, ys) in _series(rows, "p", "partial").items():
        ax.plot(xs, ys, label=label)
    ax.set_xlabel("input probability p")
    ax.set_ylabel("component value")
    ax.set_title(str(rows[0]["gate"]))
    ax.legend(fontsize="small")


def _panel_chemical(ax, path, params, rows) -> None:
    _require_columns(path, rows, ("k3", "antichain", "partial"))
    for label, (xs, ys) in _series(rows, "k3", "partial").items():
        ax.plot(xs, ys, label=label)
    ax.set_xscale("log")
    ax.set_xlabel("interaction rate k3")
    ax.set_ylabel("component value")
    ax.set_title("chemical network")
    ax.legend(fontsize="small")


def _panel_ca(ax, path, params, rows) -> None:
    _require_columns(path, rows, ("rule", "prior", "antichain", "mean", "std"))
    labels = [str(row["antichain"]) for row in rows]
    means = [float(row["mean"]) for row in rows]
    stds = [float(row["std"]) for row in rows]
    ax.bar(range(len(labels)), means, yerr=stds, capsize=3.0)
    ax.set_xticks(range(len(labels)), labels=labels, rotation=30, ha="right")
    ax.set_ylabel("component value")
    ax.set_title(f"rule {rows[0]['rule']} ({rows[0]['prior']} prior)")


def _panel_decompose(ax, path, params, rows) -> None:
    _require_columns(path, rows, ("context", "antichain", "partial"))
    groups: dict[str, list[float]] = {}
    for row in rows:
        groups.setdefault(str(row["antichain"]), []).append(float(row["partial"]))
    labels = list(groups)
    ax.boxplot([groups[label] for label in labels])
    ax.set_xticks(range(1, len(labels) + 1), labels=labels, rotation=30, ha="right")
    ax.axhline(0.0, color="grey", linewidth=0.8)
    ax.set_ylabel("component value")
    completion = " ".join(str(params.get("variables", "")).split(","))
    ax.set_title(f'"{completion}"' if completion else "contexts")


_PANELS = {
    "gates": _panel_gates,
    "ca": _panel_ca,
    "chemical": _panel_chemical,
    "decompose": _panel_decompose,
}


def render_figure(sweep_paths, out_path) -> Path:
    """Render one figure with a panel per sweep file and save it.

    All files must carry the same ``command`` parameter; the panel layout
    for that command is applied to each. Returns the output path.
    """
    if isinstance(sweep_paths, (str, Path)):
        sweep_paths = [sweep_paths]
    if not sweep_paths:
        raise SweepFormatError("no sweep files given")
    parsed = [(Path(p),) + read_sweep(p) for p in sweep_paths]
    kinds = {params.get("command") for _, params, _ in parsed}
    if len(kinds) > 1:
        raise SweepFormatError(
            "sweep files mix commands: " + ", ".join(sorted(str(k) for k in kinds))
        )
    kind = kinds.pop()
    if kind not in _PANELS:
        raise SweepFormatError(f"unsupported sweep command {kind!r}")
    panel = _PANELS[kind]
    fig, axes = plt.subplots(
        1, len(parsed), figsize=(4.4 * len(parsed), 3.4), squeeze=False
    )
    try:
        for ax, (path, params, rows) in zip(axes[0], parsed):
            panel(ax, path, params, rows)
        fig.tight_layout()
        fig.savefig(out_path)
    finally:
        plt.close(fig)
    return Path(out_path)
