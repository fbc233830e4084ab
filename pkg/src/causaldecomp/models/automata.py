"""Elementary cellular automata as three-variable intervention models.

The variables are one cell's neighborhood at time t, namely left (A, index
0), center (B, index 1), and right (C, index 2); the outcome is the center
cell at t+1, a deterministic function of the neighborhood given by the
Wolfram rule number. Interventions fix part of the neighborhood; the
remaining cells are adjusted away under a prior over neighborhood states:
the joint of the two free cells when one is intervened, the single-cell
marginal when two are, and nothing when the full neighborhood is set.

Priors are either analytic (maximum-entropy uniform, or the all-zeros
point mass) or estimated empirically from simulated runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..errors import OracleDomainError, PriorStateError
from ..lattice import _as_mask, subset_indices
from .oracle import InterventionOracle

VARIABLE_NAMES = ("A", "B", "C")

DEFAULT_CELLS = 100
DEFAULT_STEPS = 10_000
DEFAULT_BURN_IN = 500
DEFAULT_SEEDS = tuple(range(20))


def rule_bit(rule: int, a: int, b: int, c: int) -> int:
    """Output of a Wolfram rule for the neighborhood (a, b, c)."""
    return rule >> (4 * a + 2 * b + c) & 1


def _check_rule(rule: int) -> None:
    if not isinstance(rule, int) or not 0 <= rule <= 255:
        raise OracleDomainError(f"rule {rule!r} is not an integer in [0, 255]")


@dataclass(frozen=True)
class NeighborhoodPrior:
    """Distribution over the 8 neighborhood states, indexed by 4a + 2b + c.

    ``kind`` records how it was produced ("maxent", "zeros", or "empirical");
    empirical priors also carry their simulation parameters so downstream
    artifacts can cite them. A prior is degenerate when some state has zero
    mass; expectations then simply give those states zero weight.
    """

    probs: tuple[float, ...]
    kind: str
    init: str | None = None
    rule: int | None = None
    cells: int | None = None
    steps: int | None = None
    burn_in: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if len(self.probs) != 8:
            raise OracleDomainError("a neighborhood prior needs exactly 8 state masses")
        if any(p < 0 for p in self.probs):
            raise OracleDomainError("prior masses must be nonnegative")
        if abs(sum(self.probs) - 1.0) > 1e-12:
            raise OracleDomainError(f"prior masses sum to {sum(self.probs)!r}, not 1")

    @property
    def degenerate(self) -> bool:
        return any(p == 0.0 for p in self.probs)

    def pair_marginal(self, i: int, j: int) -> dict[tuple[int, int], float]:
        """Joint distribution of variables i and j (i < j), marginalizing the third."""
        out: dict[tuple[int, int], float] = {}
        for state in range(8):
            trip = (state >> 2 & 1, state >> 1 & 1, state & 1)
            key = (trip[i], trip[j])
            out[key] = out.get(key, 0.0) + self.probs[state]
        return out

    def single_marginal(self, i: int) -> dict[int, float]:
        out = {0: 0.0, 1: 0.0}
        for state in range(8):
            trip = (state >> 2 & 1, state >> 1 & 1, state & 1)
            out[trip[i]] += self.probs[state]
        return out

    def table_text(self) -> str:
        """Triple -> frequency dump, one 'abc probability' line per state."""
        lines = []
        for state in range(8):
            lines.append(f"{state >> 2 & 1}{state >> 1 & 1}{state & 1} {self.probs[state]!r}")
        return "\n".join(lines) + "\n"


def maxent_prior() -> NeighborhoodPrior:
    return NeighborhoodPrior(probs=(0.125,) * 8, kind="maxent")


def zeros_prior() -> NeighborhoodPrior:
    return NeighborhoodPrior(probs=(1.0,) + (0.0,) * 7, kind="zeros")


@dataclass(frozen=True)
class CAModel:
    """A rule plus the prior used to adjust away un-intervened cells."""

    rule: int
    prior: NeighborhoodPrior | None = None

    def __post_init__(self) -> None:
        _check_rule(self.rule)


def _rule_table(rule: int) -> np.ndarray:
    return np.array([rule >> i & 1 for i in range(8)], dtype=np.uint8)


def simulate_rule(rule: int, init_row: np.ndarray, steps: int) -> np.ndarray:
    """Evolve a row of cells with periodic boundaries; returns (steps, cells).

    Row 0 is the initial state, so ``steps`` counts states, not updates.
    """
    _check_rule(rule)
    table = _rule_table(rule)
    row = np.asarray(init_row, dtype=np.uint8) & 1
    history = np.empty((steps, row.size), dtype=np.uint8)
    history[0] = row
    for t in range(1, steps):
        left = np.roll(row, 1)
        right = np.roll(row, -1)
        row = table[4 * left + 2 * row + right]
        history[t] = row
    return history


def initial_row(init: str, cells: int, rng: np.random.Generator) -> np.ndarray:
    if init == "random":
        return rng.integers(0, 2, size=cells, dtype=np.uint8)
    if init == "middle1":
        row = np.zeros(cells, dtype=np.uint8)
        row[cells // 2] = 1
        return row
    raise OracleDomainError(f"unknown initial condition {init!r}; expected random or middle1")


def ca_estimate_prior(
    rule: int,
    init: str,
    cells: int = DEFAULT_CELLS,
    steps: int = DEFAULT_STEPS,
    burn_in: int = DEFAULT_BURN_IN,
    seeds: Iterable[int] = DEFAULT_SEEDS,
) -> list[NeighborhoodPrior]:
    """Estimate neighborhood priors from simulation, one per seed.

    Each run evolves ``cells`` cells for ``steps`` states (periodic
    boundaries), discards the first ``burn_in`` states, and pools the
    (left, center, right) triples of every remaining cell position into a
    frequency table. The seed feeds a named PCG64 generator and is recorded
    on the resulting prior; the middle1 start is deterministic, so its
    priors coincide across seeds.
    """
    _check_rule(rule)
    if burn_in >= steps:
        raise OracleDomainError(f"burn_in {burn_in} must be below steps {steps}")
    priors = []
    for seed in seeds:
        rng = np.random.default_rng(seed)
        history = simulate_rule(rule, initial_row(init, cells, rng), steps)
        kept = history[burn_in:]
        states = 4 * np.roll(kept, 1, axis=1) + 2 * kept + np.roll(kept, -1, axis=1)
        counts = np.bincount(states.ravel(), minlength=8)
        probs = counts / counts.sum()
        priors.append(
            NeighborhoodPrior(
                probs=tuple(float(p) for p in probs),
                kind="empirical",
                init=init,
                rule=rule,
                cells=cells,
                steps=steps,
                burn_in=burn_in,
                seed=int(seed),
            )
        )
    return priors


def ca_interventional_expectation(model: CAModel, subset, assignment) -> float:
    """E[next center cell | do(subset = assignment)] under the model's prior.

    Un-intervened cells are weighted by the prior's joint (two free cells)
    or single marginal (one free cell); a full intervention reads the rule
    directly. States the prior never visited carry zero weight.
    """
    if model.prior is None:
        raise PriorStateError(
            f"rule {model.rule} model has no prior; estimate or choose one first"
        )
    mask = _as_mask(subset)
    idx = subset_indices(mask)
    if idx[-1] > 2:
        raise OracleDomainError("neighborhood variables are A=0, B=1, C=2")
    if len(assignment) != len(idx):
        raise OracleDomainError(
            f"assignment {assignment!r} does not match subset of size {len(idx)}"
        )
    fixed = dict(zip(idx, (int(v) for v in assignment)))
    free = [i for i in (0, 1, 2) if i not in fixed]

    if not free:
        return float(rule_bit(model.rule, fixed[0], fixed[1], fixed[2]))
    if len(free) == 1:
        weights = model.prior.single_marginal(free[0])
        total = 0.0
        for b, w in weights.items():
            x = dict(fixed)
            x[free[0]] = b
            total += w * rule_bit(model.rule, x[0], x[1], x[2])
        return total
    pair = model.prior.pair_marginal(free[0], free[1])
    total = 0.0
    for (b1, b2), w in pair.items():
        x = dict(fixed)
        x[free[0]] = b1
        x[free[1]] = b2
        total += w * rule_bit(model.rule, x[0], x[1], x[2])
    return total


def ca_oracle(model: CAModel) -> InterventionOracle:
    if model.prior is None:
        raise PriorStateError(
            f"rule {model.rule} model has no prior; estimate or choose one first"
        )
    return InterventionOracle(
        domains=((0, 1), (0, 1), (0, 1)),
        expectation=lambda mask, x: ca_interventional_expectation(model, mask, x),
    )
