"""Generic intervention oracle and the maximal average causal effect (MACE).

An oracle is a pure function from (intervened subset, assignment) to an
expected outcome, together with the declared finite domain of every
variable. MACE of a subset is the spread between the best and worst
assignment: max minus min of the interventional expectation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, NamedTuple

from ..errors import OracleDomainError
from ..lattice import _as_mask, subset_indices, subset_label


@dataclass(frozen=True)
class InterventionOracle:
    """Interventional expectations over variables with finite domains.

    ``expectation(subset_mask, assignment)`` must be pure; ``assignment``
    lists one value per intervened variable, ordered by variable index.
    Domain tuples are ordered, and that order is what breaks MACE ties.
    """

    domains: tuple[tuple[float, ...], ...]
    expectation: Callable[[int, tuple[float, ...]], float]

    def __post_init__(self) -> None:
        if not self.domains:
            raise OracleDomainError("oracle needs at least one variable")
        for i, dom in enumerate(self.domains):
            if len(dom) < 1:
                raise OracleDomainError(f"variable {i} has an empty domain")

    @property
    def n(self) -> int:
        return len(self.domains)


class MaceResult(NamedTuple):
    value: float
    argmax: tuple[float, ...]
    argmin: tuple[float, ...]


def mace(oracle: InterventionOracle, subset) -> MaceResult:
    """Maximal average causal effect of intervening on ``subset``.

    Enumerates every assignment over the subset's domains and returns
    max - min of the expectation (always >= 0) along with one maximizing
    and one minimizing assignment; ties go to the lexicographically
    smallest assignment in declared domain order.
    """
    mask = _as_mask(subset)
    idx = subset_indices(mask)
    if idx[-1] >= oracle.n:
        raise OracleDomainError(
            f"subset {subset_label(mask)} exceeds the oracle's {oracle.n} variables"
        )
    best = worst = None
    best_x = worst_x = None
    for x in itertools.product(*(oracle.domains[i] for i in idx)):
        v = float(oracle.expectation(mask, x))
        if best is None or v > best:
            best, best_x = v, x
        if worst is None or v < worst:
            worst, worst_x = v, x
    return MaceResult(best - worst, best_x, worst_x)


def mace_table(oracle: InterventionOracle) -> dict[int, float]:
    """MACE for every nonempty subset, keyed by subset bitmask."""
    full = (1 << oracle.n) - 1
    return {m: mace(oracle, m).value for m in range(1, full + 1)}
