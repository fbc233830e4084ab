"""Birth-death chemical system with two inputs and an interaction term.

The output species is produced at rate k1*[X1] + k2*[X2] + k3*[X1][X2] and
degraded at rate k4 (fixed to 1), so its steady state is that production
sum divided by k4. Interventions add a perturbation delta in {0, eps} to
each intervened input concentration, and expectations are reported as the
perturbed steady state normalized by the unperturbed one.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import OracleDomainError, SteadyStateError
from ..lattice import _as_mask, subset_indices
from .oracle import InterventionOracle


@dataclass(frozen=True)
class ChemicalModel:
    k1: float
    k2: float
    k3: float
    k4: float = 1.0
    x1: float = 1.0
    x2: float = 1.0
    eps: float = 1.0

    def __post_init__(self) -> None:
        for name in ("k1", "k2", "k3", "k4"):
            if getattr(self, name) < 0:
                raise OracleDomainError(f"rate {name} must be nonnegative")
        if self.k4 == 0:
            raise OracleDomainError("degradation rate k4 cannot be zero")
        if self.steady_state(self.x1, self.x2) <= 0:
            raise SteadyStateError(
                "baseline steady state is zero; normalized expectations undefined"
            )

    def steady_state(self, x1: float, x2: float) -> float:
        return (self.k1 * x1 + self.k2 * x2 + self.k3 * x1 * x2) / self.k4


def chemical_expectation(model: ChemicalModel, subset, assignment) -> float:
    """Perturbed-over-baseline steady state for do(delta_subset = assignment).

    Assignment entries are the per-variable perturbations (0 or eps);
    un-intervened inputs stay at their baseline concentrations.
    """
    mask = _as_mask(subset)
    idx = subset_indices(mask)
    if idx[-1] > 1:
        raise OracleDomainError("chemical inputs are X1=0 and X2=1")
    if len(assignment) != len(idx):
        raise OracleDomainError(
            f"assignment {assignment!r} does not match subset of size {len(idx)}"
        )
    delta = {0: 0.0, 1: 0.0}
    for i, v in zip(idx, assignment):
        delta[i] = float(v)
    return model.steady_state(model.x1 + delta[0], model.x2 + delta[1]) / model.steady_state(
        model.x1, model.x2
    )


def chemical_oracle(model: ChemicalModel) -> InterventionOracle:
    return InterventionOracle(
        domains=((0.0, model.eps), (0.0, model.eps)),
        expectation=lambda mask, x: chemical_expectation(model, mask, x),
    )
