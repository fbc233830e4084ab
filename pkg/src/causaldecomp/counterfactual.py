"""Counterfactual sufficient and necessary causes of a binary outcome.

Fix an actual assignment of binary variables and an outcome function Y. For
an antichain alpha, the forced outcome Y_cap(alpha) is the minimum of Y over
its members after counterfactually setting each member's variables to 1
while leaving the others at their actual values. Moebius-inverting Y_cap
over the redundancy lattice gives a degree table D; for monotone binary
outcomes D is an indicator, and the members of its unique D = 1 antichain
are the minimal sufficient causes (read as conjunctions). A necessary cause
is what all sufficient causes share: the intersection of their variable
sets, when nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import OutcomeDomainError
from .lattice import Antichain, build_lattice, subset_label


@dataclass(frozen=True)
class ActualContext:
    """Binary variables with actual values plus a total outcome table.

    ``outcome[mask]`` is Y at the assignment whose bit i gives variable i's
    value, so the table is total by construction (length 2**n).
    """

    n: int
    actual: tuple[int, ...]
    outcome: tuple[float, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n:
            raise OutcomeDomainError("need at least one variable")
        if len(self.actual) != self.n or any(v not in (0, 1) for v in self.actual):
            raise OutcomeDomainError(f"actual values must be {self.n} bits")
        if len(self.outcome) != 1 << self.n:
            raise OutcomeDomainError(
                f"outcome table has {len(self.outcome)} entries, expected {1 << self.n}"
            )

    @classmethod
    def from_function(
        cls,
        n: int,
        fn: Callable[[tuple[int, ...]], float],
        actual: Sequence[int] | None = None,
    ) -> "ActualContext":
        """Tabulate a rule Y(assignment tuple); actual defaults to all zeros."""
        table = tuple(
            float(fn(tuple(mask >> i & 1 for i in range(n)))) for mask in range(1 << n)
        )
        act = tuple(actual) if actual is not None else (0,) * n
        return cls(n=n, actual=act, outcome=table)

    @classmethod
    def from_truth_table_text(
        cls, text: str, actual: Sequence[int] | None = None
    ) -> "ActualContext":
        """Parse '<bits> <outcome>' lines, one per assignment, any order.

        Bits read variable 0 first (leftmost character).
        """
        entries: dict[int, float] = {}
        n = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2 or any(ch not in "01" for ch in parts[0]):
                raise OutcomeDomainError(f"line {lineno}: expected '<bits> <outcome>'")
            if n is None:
                n = len(parts[0])
            elif len(parts[0]) != n:
                raise OutcomeDomainError(f"line {lineno}: inconsistent variable count")
            mask = sum(1 << i for i, ch in enumerate(parts[0]) if ch == "1")
            if mask in entries:
                raise OutcomeDomainError(f"line {lineno}: assignment {parts[0]} repeated")
            entries[mask] = float(parts[1])
        if n is None:
            raise OutcomeDomainError("truth table text has no rows")
        if len(entries) != 1 << n:
            raise OutcomeDomainError(
                f"truth table has {len(entries)} of {1 << n} assignments"
            )
        return cls(
            n=n,
            actual=tuple(actual) if actual is not None else (0,) * n,
            outcome=tuple(entries[m] for m in range(1 << n)),
        )

    @property
    def actual_mask(self) -> int:
        return sum(1 << i for i, v in enumerate(self.actual) if v)

    @property
    def is_binary(self) -> bool:
        return all(v in (0.0, 1.0) for v in self.outcome)

    def evaluate(self, assignment_mask: int) -> float:
        return self.outcome[assignment_mask]


def y_cap(context: ActualContext, alpha: Antichain) -> float:
    """Minimum forced outcome over the antichain's members.

    Each member's variables are set to 1, the rest stay at their actual
    values. Non-binary outcomes are allowed here.
    """
    if alpha.max_index >= context.n:
        raise OutcomeDomainError(
            f"antichain {alpha.label()} exceeds the context's {context.n} variables"
        )
    base = context.actual_mask
    return min(context.evaluate(base | m) for m in alpha.members)


@dataclass(frozen=True)
class CauseReport:
    """Decomposed causes of outcome 1 in one actual context.

    ``degrees`` maps each antichain to the Moebius inversion of Y_cap (exact
    integers for binary outcomes). ``sufficient_antichains`` lists the
    antichains with degree 1; their members, pooled in ``sufficient_causes``,
    are the sufficient conjunctions, each definitionally verified (forcing it
    alone yields outcome 1). ``necessary_cause`` is the intersection of all
    sufficient conjunctions when it is nonempty. ``monotone`` is False when
    Y_cap decreased somewhere on the lattice; degrees are then reported as-is
    and only verified causes are listed.
    """

    context: ActualContext
    degrees: Mapping[Antichain, int]
    sufficient_antichains: tuple[Antichain, ...]
    sufficient_causes: tuple[int, ...]
    necessary_cause: int | None
    monotone: bool

    def text(self, names: Sequence[str] | None = None) -> str:
        lines = [
            f"actual assignment: {''.join(str(v) for v in self.context.actual)}",
            f"y_cap monotone on lattice: {self.monotone}",
            "degrees (nonzero):",
        ]
        for a, d in self.degrees.items():
            if d != 0:
                lines.append(f"  {a.label(names)}: {d}")
        if self.sufficient_causes:
            causes = ", ".join(subset_label(m, names) for m in self.sufficient_causes)
            lines.append(f"sufficient causes (conjunctions): {causes}")
        else:
            lines.append("sufficient causes (conjunctions): none")
        if self.necessary_cause is not None:
            lines.append(f"necessary cause: {subset_label(self.necessary_cause, names)}")
        else:
            lines.append("necessary cause: none")
        return "\n".join(lines) + "\n"


def decompose_causes(context: ActualContext) -> CauseReport:
    """Invert Y_cap over the lattice and extract sufficient/necessary causes.

    Requires a binary outcome table. Degrees are computed in exact integer
    arithmetic by forward substitution against the lattice's down-sets.
    """
    if not context.is_binary:
        raise OutcomeDomainError(
            "cause extraction requires a binary outcome table (y_cap itself does not)"
        )
    lat = build_lattice(context.n)
    base = context.actual_mask
    values = [
        min(int(context.outcome[base | m]) for m in node.members) for node in lat.nodes
    ]

    monotone = True
    for j, p in lat.cover_edges():
        if values[j] > values[p]:
            monotone = False
            break

    degrees = list(values)
    for j in range(lat.size):
        ids = lat.down_ids(j)
        degrees[j] = values[j] - sum(degrees[i] for i in ids[:-1])

    sufficient_nodes = tuple(lat.nodes[j] for j in range(lat.size) if degrees[j] == 1)
    pooled: list[int] = []
    for node in sufficient_nodes:
        for m in node.members:
            if m not in pooled and context.evaluate(base | m) == 1.0:
                pooled.append(m)
    pooled.sort(key=lambda m: (m.bit_count(), m))

    necessary: int | None = None
    if pooled:
        inter = pooled[0]
        for m in pooled[1:]:
            inter &= m
        necessary = inter if inter else None

    return CauseReport(
        context=context,
        degrees={lat.nodes[j]: degrees[j] for j in range(lat.size)},
        sufficient_antichains=sufficient_nodes,
        sufficient_causes=tuple(pooled),
        necessary_cause=necessary,
        monotone=monotone,
    )


def contextual_shift(context: ActualContext) -> CauseReport:
    """Causes under a non-default actual assignment; same computation.

    Thin alias kept so call sites can say what they mean when the point of
    the call is the shifted context rather than the default all-zeros one.
    """
    return decompose_causes(context)
