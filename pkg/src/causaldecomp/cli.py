"""Command line front-end for the decomposition pipelines.

Every command writes either CSV (with ``# key=value`` parameter comments,
then a header row) or a JSON object with the same parameters and rows.
Output is deterministic: rerunning a command reproduces the file byte for
byte, floats are serialized with full round-trip precision, and sweep rows
always include the reconstruction residual of their decomposition.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import pipelines
from .counterfactual import ActualContext, decompose_causes
from .errors import OracleDomainError
from .lattice import build_lattice, export_dot, lattice_table, subset_label
from .models import (
    CAModel,
    ChemicalModel,
    GateModel,
    load_external_effects,
    maxent_prior,
    zeros_prior,
)
from .models.automata import (
    DEFAULT_BURN_IN,
    DEFAULT_CELLS,
    DEFAULT_STEPS,
    VARIABLE_NAMES,
)


def parse_grid(spec: str) -> np.ndarray:
    """Parse '[lin:|log:]start:stop:points' into a 1-D grid."""
    parts = spec.split(":")
    scale = "lin"
    if parts and parts[0] in ("lin", "log"):
        scale = parts[0]
        parts = parts[1:]
    if len(parts) != 3:
        raise OracleDomainError(f"grid {spec!r} is not start:stop:points")
    try:
        start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise OracleDomainError(f"grid {spec!r} has non-numeric fields") from None
    if points < 1:
        raise OracleDomainError("grid needs at least one point")
    if scale == "log":
        if start <= 0 or stop <= 0:
            raise OracleDomainError("log grid endpoints must be positive")
        return np.logspace(np.log10(start), np.log10(stop), points)
    return np.linspace(start, stop, points)


def parse_seeds(spec: str) -> tuple[int, ...]:
    """Parse '0-19' / '0,1,7' / mixes of both into a seed tuple."""
    seeds: list[int] = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if "-" in chunk[1:]:
            lo, hi = chunk.split("-", 1)
            seeds.extend(range(int(lo), int(hi) + 1))
        elif chunk:
            seeds.append(int(chunk))
    if not seeds:
        raise OracleDomainError(f"seed list {spec!r} is empty")
    return tuple(seeds)


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(out_path: str, fmt: str, params: dict, columns: list[str], rows: list[list]) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        for key, val in params.items():
            buf.write(f"# {key}={val}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
    else:
        doc = {
            "params": params,
            "rows": [dict(zip(columns, row)) for row in rows],
        }
        text = json.dumps(doc, indent=2) + "\n"
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _emit_text(out_path: str, text: str) -> None:
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# -- commands ----------------------------------------------------------------


def cmd_gates(args: argparse.Namespace) -> int:
    grid = parse_grid(args.grid)
    columns = ["gate", "p", "antichain", "partial", "residual"]
    rows = []
    for p in grid:
        decomp = pipelines.gate_decomposition(GateModel(args.gate, float(p)))
        for node in decomp.lattice.nodes:
            rows.append(
                [args.gate, float(p), node.label(), decomp.partials[node], decomp.reconstruction_residual]
            )
    params = {"command": "gates", "gate": args.gate, "grid": args.grid}
    _emit(args.out, args.format, params, columns, rows)
    return 0


def cmd_ca(args: argparse.Namespace) -> int:
    params = {
        "command": "ca",
        "rule": args.rule,
        "prior": args.prior,
        "min_display": args.min_display,
    }
    if args.prior in ("maxent", "zeros"):
        prior = maxent_prior() if args.prior == "maxent" else zeros_prior()
        decomp = pipelines.ca_decomposition(CAModel(args.rule, prior))
        means = decomp.partials
        stds = {node: 0.0 for node in decomp.lattice.nodes}
        residual = decomp.reconstruction_residual
        lat = decomp.lattice
    else:
        seeds = parse_seeds(args.seeds)
        runs = pipelines.ca_empirical_decompositions(
            args.rule,
            args.prior,
            cells=args.cells,
            steps=args.steps,
            burn_in=args.burn_in,
            seeds=seeds,
        )
        means, stds, residual = pipelines.aggregate_partials([d for _, d in runs])
        lat = runs[0][1].lattice
        params.update(
            {
                "init": args.prior,
                "cells": args.cells,
                "steps": args.steps,
                "burn_in": args.burn_in,
                "seeds": ",".join(str(s) for s in seeds),
            }
        )
    columns = ["rule", "prior", "antichain", "mean", "std", "residual"]
    rows = []
    for node in lat.nodes:
        if abs(means[node]) < args.min_display:
            continue
        rows.append(
            [args.rule, args.prior, node.label(VARIABLE_NAMES), means[node], stds[node], residual]
        )
    _emit(args.out, args.format, params, columns, rows)
    return 0


def cmd_chemical(args: argparse.Namespace) -> int:
    grid = parse_grid(args.grid)
    columns = ["k3", "antichain", "partial", "residual"]
    rows = []
    for k3 in grid:
        model = ChemicalModel(
            k1=args.k1, k2=args.k2, k3=float(k3), x1=args.x1, x2=args.x2, eps=args.eps
        )
        decomp = pipelines.chemical_decomposition(model)
        for node in decomp.lattice.nodes:
            rows.append(
                [float(k3), node.label(), decomp.partials[node], decomp.reconstruction_residual]
            )
    params = {
        "command": "chemical",
        "k1": args.k1,
        "k2": args.k2,
        "grid": args.grid,
        "x1": args.x1,
        "x2": args.x2,
        "eps": args.eps,
    }
    _emit(args.out, args.format, params, columns, rows)
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    effects = load_external_effects(args.effects)
    results = pipelines.context_decompositions(effects)
    columns = ["context", "antichain", "partial", "residual"]
    rows = []
    for label, decomp in results:
        for node in decomp.lattice.nodes:
            rows.append(
                [
                    label,
                    node.label(effects.variables),
                    decomp.partials[node],
                    decomp.reconstruction_residual,
                ]
            )
    params = {
        "command": "decompose",
        "effects": args.effects,
        "variables": ",".join(effects.variables),
        "kind": "signed_ce_cap",
    }
    _emit(args.out, args.format, params, columns, rows)
    return 0


def cmd_lattice(args: argparse.Namespace) -> int:
    lat = build_lattice(args.n)
    names = args.names.split(",") if args.names else None
    if args.format == "dot":
        _emit_text(args.out, export_dot(lat, names))
    else:
        _emit_text(args.out, lattice_table(lat, names))
    return 0


def cmd_causes(args: argparse.Namespace) -> int:
    with open(args.table, "r", encoding="utf-8") as fh:
        text = fh.read()
    actual = None
    if args.context is not None:
        if any(ch not in "01" for ch in args.context):
            raise OracleDomainError(f"context {args.context!r} must be a bit string")
        actual = tuple(int(ch) for ch in args.context)
    ctx = ActualContext.from_truth_table_text(text, actual=actual)
    report = decompose_causes(ctx)
    names = args.names.split(",") if args.names else None
    if args.format == "json":
        doc = {
            "actual": "".join(str(v) for v in ctx.actual),
            "monotone": report.monotone,
            "degrees": {
                a.label(names): int(d) for a, d in report.degrees.items() if d != 0
            },
            "sufficient_causes": [
                subset_label(m, names) for m in report.sufficient_causes
            ],
            "necessary_cause": (
                subset_label(report.necessary_cause, names)
                if report.necessary_cause is not None
                else None
            ),
        }
        _emit_text(args.out, json.dumps(doc, indent=2) + "\n")
    else:
        _emit_text(args.out, report.text(names))
    return 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causaldecomp",
        description="Decompose interventional causal effects into unique, "
        "redundant, and synergistic parts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = {"--format": dict(choices=("csv", "json"), default="csv"),
              "--out": dict(default="-", help="output path, '-' for stdout")}

    p = sub.add_parser("gates", help="sweep a logic gate over input probabilities")
    p.add_argument("--gate", required=True, choices=("OR", "AND", "XOR", "COPY"))
    p.add_argument("--grid", default="0.01:0.99:99", help="p grid as start:stop:points")
    for flag, kw in common.items():
        p.add_argument(flag, **kw)
    p.set_defaults(func=cmd_gates)

    p = sub.add_parser("ca", help="decompose one elementary cellular automaton rule")
    p.add_argument("--rule", type=int, required=True)
    p.add_argument("--prior", required=True, choices=("maxent", "zeros", "random", "middle1"))
    p.add_argument("--cells", type=int, default=DEFAULT_CELLS)
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument("--burn-in", type=int, default=DEFAULT_BURN_IN, dest="burn_in")
    p.add_argument("--seeds", default="0-19", help="e.g. 0-19 or 0,1,7")
    p.add_argument(
        "--min-display",
        type=float,
        default=0.01,
        dest="min_display",
        help="hide antichains whose mean partial is below this (0 disables)",
    )
    for flag, kw in common.items():
        p.add_argument(flag, **kw)
    p.set_defaults(func=cmd_ca)

    p = sub.add_parser("chemical", help="sweep the chemical model's interaction rate")
    p.add_argument("--k1", type=float, default=10.0)
    p.add_argument("--k2", type=float, default=1.0)
    p.add_argument("--grid", default="log:0.01:1000.0:60", help="k3 grid, lin: or log:")
    p.add_argument("--x1", type=float, default=1.0)
    p.add_argument("--x2", type=float, default=1.0)
    p.add_argument("--eps", type=float, default=1.0)
    for flag, kw in common.items():
        p.add_argument(flag, **kw)
    p.set_defaults(func=cmd_chemical)

    p = sub.add_parser("decompose", help="decompose an external effects document")
    p.add_argument("--effects", required=True, help="path to the effects JSON document")
    for flag, kw in common.items():
        p.add_argument(flag, **kw)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("lattice", help="export the redundancy lattice")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--names", default=None, help="comma-separated variable names")
    p.add_argument("--format", choices=("dot", "table"), default="dot")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("causes", help="sufficient/necessary causes from a truth table")
    p.add_argument("--table", required=True, help="path to '<bits> <outcome>' lines")
    p.add_argument("--context", default=None, help="actual assignment bits, default zeros")
    p.add_argument("--names", default=None, help="comma-separated variable names")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_causes)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # surface package errors as clean CLI failures
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
