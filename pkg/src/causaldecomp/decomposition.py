"""Measures on the redundancy lattice and their Moebius decomposition.

A measure table assigns a real value to every lattice node. The redundant
measure of an antichain is the minimum of a subset-level measure over its
members (a signed variant takes the least-magnitude common-sign value).
Moebius inversion then splits the top-level effect into partial contributions
per antichain: singletons carry unique effects, multi-member antichains carry
redundancies, and antichains without any singleton member carry synergies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import (
    IncompleteMeasureError,
    MeasureDomainError,
    MonotonicityError,
    NegativePartialError,
)
from .lattice import Antichain, RedundancyLattice, _as_mask, subset_label

# Measure kinds. "mace_cap" is a min over maximal average causal effects and
# must be monotone and nonnegative; "signed_ce_cap" is the signed common-sign
# variant where nothing beyond reconstruction is guaranteed;
# "counterfactual_y_cap" is the min of counterfactually forced outcomes.
MACE_CAP = "mace_cap"
SIGNED_CE_CAP = "signed_ce_cap"
COUNTERFACTUAL_Y_CAP = "counterfactual_y_cap"
KINDS = (MACE_CAP, SIGNED_CE_CAP, COUNTERFACTUAL_Y_CAP)

MONOTONE_SLACK = 1e-12
NONNEG_TOL = 1e-9
RECONSTRUCTION_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MeasureTable:
    """A complete assignment of one value per lattice node, tagged by kind."""

    lattice: RedundancyLattice
    values: Mapping[Antichain, float]
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise MeasureDomainError(f"unknown measure kind {self.kind!r}; expected one of {KINDS}")
        missing = [a for a in self.lattice.nodes if a not in self.values]
        if missing:
            raise IncompleteMeasureError(
                f"measure is missing {len(missing)} node(s), first {missing[0].label()}"
            )
        if self.kind == MACE_CAP:
            for a in self.lattice.nodes:
                if self.values[a] < 0:
                    raise MeasureDomainError(
                        f"{self.kind} value at {a.label()} is negative ({self.values[a]!r})"
                    )

    def value(self, alpha: Antichain) -> float:
        return float(self.values[alpha])

    def as_vector(self) -> np.ndarray:
        return np.array([self.values[a] for a in self.lattice.nodes], dtype=float)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Partial contributions per antichain, from Moebius-inverting a measure."""

    lattice: RedundancyLattice
    partials: Mapping[Antichain, float]
    source_kind: str
    reconstruction_residual: float

    def partial(self, alpha: Antichain) -> float:
        return float(self.partials[alpha])

    def as_vector(self) -> np.ndarray:
        return np.array([self.partials[a] for a in self.lattice.nodes], dtype=float)

    def nonzero(self, threshold: float = 0.0) -> dict[Antichain, float]:
        return {
            a: float(v) for a, v in self.partials.items() if abs(v) > threshold
        }


def _normalize_subset_measure(
    lattice: RedundancyLattice, subset_measure: Mapping
) -> dict[int, float]:
    """Key subset values by bitmask and demand every nonempty subset."""
    table: dict[int, float] = {}
    for key, val in subset_measure.items():
        table[_as_mask(key)] = float(val)
    full = (1 << lattice.n) - 1
    missing = [m for m in range(1, full + 1) if m not in table]
    if missing:
        raise IncompleteMeasureError(
            f"subset measure is missing {subset_label(missing[0])}"
            + (f" and {len(missing) - 1} more" if len(missing) > 1 else "")
        )
    return table


def redundant_measure(
    lattice: RedundancyLattice, subset_measure: Mapping
) -> MeasureTable:
    """Minimum of a nonnegative subset measure over each antichain's members.

    ``subset_measure`` must cover every nonempty subset of the variables;
    keys may be bitmasks or iterables of variable indices. Negative values
    are rejected: use :func:`signed_redundant_measure` for signed effects.
    """
    table = _normalize_subset_measure(lattice, subset_measure)
    bad = [m for m, v in table.items() if v < 0]
    if bad:
        bad.sort()
        raise MeasureDomainError(
            f"subset measure is negative at {subset_label(bad[0])}; "
            "signed effects belong in signed_redundant_measure"
        )
    values = {
        a: min(table[m] for m in a.members) for a in lattice.nodes
    }
    return MeasureTable(lattice, values, MACE_CAP)


def signed_redundant_measure(
    lattice: RedundancyLattice, subset_effects: Mapping
) -> MeasureTable:
    """Common-sign redundancy for signed effects.

    Per antichain: the minimum when every member effect is strictly positive,
    the maximum when every member effect is strictly negative, and 0 on any
    mixed or zero-containing family. On single-member antichains this reduces
    to the member's effect unchanged.
    """
    table = _normalize_subset_measure(lattice, subset_effects)

    def combine(alpha: Antichain) -> float:
        vals = [table[m] for m in alpha.members]
        if all(v > 0 for v in vals):
            return min(vals)
        if all(v < 0 for v in vals):
            return max(vals)
        return 0.0

    values = {a: combine(a) for a in lattice.nodes}
    return MeasureTable(lattice, values, SIGNED_CE_CAP)


def check_monotone(measure: MeasureTable) -> list[tuple[Antichain, Antichain]]:
    """Cover pairs (alpha below beta) where the measure decreases upward.

    Empty iff measure(alpha) <= measure(beta) + 1e-12 on every cover edge,
    which by transitivity bounds every comparable pair.
    """
    lat = measure.lattice
    vals = measure.values
    bad = []
    for j, p in lat.cover_edges():
        lo, hi = lat.nodes[j], lat.nodes[p]
        if vals[lo] > vals[hi] + MONOTONE_SLACK:
            bad.append((lo, hi))
    return bad


def zeta_transform(lattice: RedundancyLattice, values: Mapping[Antichain, float]) -> dict[Antichain, float]:
    """Down-set sums: out(beta) = sum of values(alpha) over alpha <= beta.

    Pure-Python summation in ascending node order, so integer inputs stay
    exact integers.
    """
    vec = [values[a] for a in lattice.nodes]
    out = {}
    for j, node in enumerate(lattice.nodes):
        out[node] = sum(vec[i] for i in lattice.down_ids(j))
    return out


def mobius_transform(lattice: RedundancyLattice, values: Mapping[Antichain, float]) -> dict[Antichain, float]:
    """Inverse of :func:`zeta_transform`: out(b) = sum mu(a, b) * values(a).

    For n <= 4 this contracts against the precomputed integer Moebius table;
    for n = 5 it solves the zeta system by forward substitution in topological
    order, which yields the same values without materializing the table.
    Integer inputs stay exact integers on both paths.
    """
    vec = [values[a] for a in lattice.nodes]
    if lattice._mu is not None:
        cols = lattice._mu
        out_vals = []
        for j in range(lattice.size):
            ids = lattice.down_ids(j)
            out_vals.append(sum(vec[i] * int(cols[i, j]) for i in ids))
    else:
        out_vals = list(vec)
        for j in range(lattice.size):
            ids = lattice.down_ids(j)
            out_vals[j] = vec[j] - sum(out_vals[i] for i in ids[:-1])
    return {a: out_vals[j] for j, a in enumerate(lattice.nodes)}


def invert(measure: MeasureTable) -> Decomposition:
    """Moebius-invert a measure table into per-antichain partial contributions.

    partial(beta) = sum over alpha <= beta of mu(alpha, beta) * measure(alpha).

    For the ``mace_cap`` kind the measure must be monotone on the lattice
    (violations raise, naming the offending cover pair: that means a broken
    oracle upstream) and the partials are guaranteed nonnegative; negatives
    within -1e-9 are clamped to zero, anything larger raises. The
    reconstruction residual |sum of partials - measure(top)| is recorded on
    the result for every kind.
    """
    lat = measure.lattice
    if measure.kind == MACE_CAP:
        bad = check_monotone(measure)
        if bad:
            lo, hi = bad[0]
            raise MonotonicityError(
                f"{measure.kind} measure decreases from {lo.label()} "
                f"({measure.values[lo]!r}) up to {hi.label()} ({measure.values[hi]!r}); "
                "the intervention oracle violates its monotonicity contract"
            )

    vec = measure.as_vector()
    if lat._mu is not None:
        out = vec @ lat._mu
    else:
        # Forward substitution against down-sets; identical values by the
        # Moebius inversion theorem, tractable at n = 5.
        out = vec.copy()
        for j in range(lat.size):
            ids = lat.down_ids(j)
            out[j] = vec[j] - sum(out[i] for i in ids[:-1])

    if measure.kind == MACE_CAP:
        low = float(out.min())
        if low < -NONNEG_TOL:
            worst = lat.nodes[int(out.argmin())]
            raise NegativePartialError(
                f"partial at {worst.label()} is {low!r}, below the -{NONNEG_TOL} clamp"
            )
        out = np.where(out < 0, 0.0, out)

    residual = float(abs(out.sum() - vec[-1]))
    partials = {a: float(out[j]) for j, a in enumerate(lat.nodes)}
    return Decomposition(lat, partials, measure.kind, residual)


def total_synergy(decomposition: Decomposition) -> float:
    """Sum of partials over antichains with no singleton member."""
    total = 0.0
    for a in decomposition.lattice.nodes:
        if not a.has_singleton:
            total += decomposition.partials[a]
    return total


# -- flat text serialization ------------------------------------------------


def measure_to_text(measure: MeasureTable) -> str:
    """Serialize as 'antichain,value,kind' lines (header included)."""
    lines = ["antichain,value,kind"]
    for a in measure.lattice.nodes:
        lines.append(f"{a.label()},{measure.values[a]!r},{measure.kind}")
    return "\n".join(lines) + "\n"


def decomposition_to_text(decomposition: Decomposition) -> str:
    """Serialize partials in the same format as :func:`measure_to_text`."""
    lines = ["antichain,value,kind"]
    for a in decomposition.lattice.nodes:
        lines.append(
            f"{a.label()},{decomposition.partials[a]!r},{decomposition.source_kind}"
        )
    lines.append(f"# reconstruction_residual={decomposition.reconstruction_residual!r}")
    return "\n".join(lines) + "\n"


def measure_from_text(lattice: RedundancyLattice, text: str) -> MeasureTable:
    """Parse the output of :func:`measure_to_text` back into a table."""
    by_label = {a.label(): a for a in lattice.nodes}
    values: dict[Antichain, float] = {}
    kind = None
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != "antichain,value,kind":
        raise IncompleteMeasureError("measure text must start with 'antichain,value,kind'")
    for ln in lines[1:]:
        label, val, k = ln.rsplit(",", 2)
        if label not in by_label:
            raise IncompleteMeasureError(f"unknown antichain label {label!r}")
        values[by_label[label]] = float(val)
        kind = k if kind is None else kind
        if k != kind:
            raise IncompleteMeasureError("mixed kinds in one measure table")
    if kind is None:
        raise IncompleteMeasureError("measure text has no rows")
    return MeasureTable(lattice, values, kind)
