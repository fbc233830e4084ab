"""End-to-end decomposition pipelines: model -> measure -> partials.

These are the compositions the command line front-end and the reproduction
suites run; each is a thin, deterministic chain of the public operations.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .decomposition import (
    Decomposition,
    invert,
    redundant_measure,
    signed_redundant_measure,
)
from .lattice import build_lattice
from .models import (
    CAModel,
    ChemicalModel,
    ExternalEffects,
    GateModel,
    InterventionOracle,
    NeighborhoodPrior,
    ca_estimate_prior,
    ca_oracle,
    chemical_oracle,
    gate_oracle,
    mace_table,
)


def oracle_decomposition(oracle: InterventionOracle) -> Decomposition:
    """MACE over every subset, min over antichains, Moebius inversion."""
    lat = build_lattice(oracle.n)
    return invert(redundant_measure(lat, mace_table(oracle)))


def gate_decomposition(model: GateModel) -> Decomposition:
    return oracle_decomposition(gate_oracle(model))


def chemical_decomposition(model: ChemicalModel) -> Decomposition:
    return oracle_decomposition(chemical_oracle(model))


def ca_decomposition(model: CAModel) -> Decomposition:
    return oracle_decomposition(ca_oracle(model))


def ca_empirical_decompositions(
    rule: int,
    init: str,
    cells: int,
    steps: int,
    burn_in: int,
    seeds: Iterable[int],
) -> list[tuple[NeighborhoodPrior, Decomposition]]:
    """One decomposition per seed, each under its own estimated prior."""
    priors = ca_estimate_prior(
        rule, init, cells=cells, steps=steps, burn_in=burn_in, seeds=seeds
    )
    return [(p, ca_decomposition(CAModel(rule, p))) for p in priors]


def aggregate_partials(
    decompositions: Sequence[Decomposition],
) -> tuple[dict, dict, float]:
    """Per-antichain mean and population standard deviation, plus the worst
    reconstruction residual across the runs."""
    if not decompositions:
        raise ValueError("nothing to aggregate")
    lat = decompositions[0].lattice
    mat = np.array([d.as_vector() for d in decompositions])
    means = mat.mean(axis=0)
    stds = mat.std(axis=0)
    mean_map = {a: float(means[j]) for j, a in enumerate(lat.nodes)}
    std_map = {a: float(stds[j]) for j, a in enumerate(lat.nodes)}
    worst = max(d.reconstruction_residual for d in decompositions)
    return mean_map, std_map, worst


def context_decompositions(
    effects: ExternalEffects,
) -> list[tuple[str, Decomposition]]:
    """Signed decomposition of every context in an external effects document."""
    lat = build_lattice(effects.n)
    out = []
    for ctx in effects.contexts:
        out.append((ctx.label, invert(signed_redundant_measure(lat, ctx.effects))))
    return out
