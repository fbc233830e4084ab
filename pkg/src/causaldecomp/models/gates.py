"""Two-input logic gates with independent Bernoulli(p) inputs.

Interventions fix a subset of inputs; the rest are marginalized under their
Bernoulli priors, so the expectation is an exact small sum (do reduces to
see here because the inputs have no parents).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import OracleDomainError
from ..lattice import _as_mask, subset_indices
from .oracle import InterventionOracle

_GATE_FUNCS = {
    "OR": lambda a, b: a | b,
    "AND": lambda a, b: a & b,
    "XOR": lambda a, b: a ^ b,
    "COPY": lambda a, b: a,  # output is the first input, second is ignored
}
GATES = tuple(_GATE_FUNCS)


@dataclass(frozen=True)
class GateModel:
    gate: str
    p: float

    def __post_init__(self) -> None:
        if self.gate not in _GATE_FUNCS:
            raise OracleDomainError(f"unknown gate {self.gate!r}; expected one of {GATES}")
        if not 0.0 <= self.p <= 1.0:
            raise OracleDomainError(f"input probability p={self.p!r} outside [0, 1]")


def gate_expectation(model: GateModel, subset, assignment) -> float:
    """E[gate output | do(subset = assignment)], exact.

    Free inputs are averaged under Bernoulli(p); with at most two inputs the
    sum has at most four terms.
    """
    mask = _as_mask(subset)
    idx = subset_indices(mask)
    if idx[-1] > 1:
        raise OracleDomainError("gates have exactly two inputs (indices 0 and 1)")
    if len(assignment) != len(idx):
        raise OracleDomainError(
            f"assignment {assignment!r} does not match subset of size {len(idx)}"
        )
    fixed = dict(zip(idx, (int(v) for v in assignment)))
    func = _GATE_FUNCS[model.gate]
    p = model.p
    total = 0.0
    free = [i for i in (0, 1) if i not in fixed]
    for bits in range(1 << len(free)):
        x = dict(fixed)
        weight = 1.0
        for k, i in enumerate(free):
            b = bits >> k & 1
            x[i] = b
            weight *= p if b else 1.0 - p
        total += weight * func(x[0], x[1])
    return total


def gate_oracle(model: GateModel) -> InterventionOracle:
    return InterventionOracle(
        domains=((0, 1), (0, 1)),
        expectation=lambda mask, x: gate_expectation(model, mask, x),
    )
