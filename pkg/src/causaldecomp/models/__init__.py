"""Intervention oracles: systems that answer E[outcome | do(subset = values)].

Each model family exposes a closed-form (or adjustment-based) expectation
plus a builder for a generic :class:`InterventionOracle`, which is what the
decomposition pipelines consume.
"""

from .oracle import InterventionOracle, MaceResult, mace, mace_table
from .gates import GATES, GateModel, gate_expectation, gate_oracle
from .automata import (
    CAModel,
    NeighborhoodPrior,
    ca_estimate_prior,
    ca_interventional_expectation,
    ca_oracle,
    initial_row,
    maxent_prior,
    rule_bit,
    simulate_rule,
    zeros_prior,
)
from .chemical import ChemicalModel, chemical_expectation, chemical_oracle
from .external import (
    ContextEffects,
    ExternalEffects,
    dump_external_effects,
    load_external_effects,
)

__all__ = [
    "InterventionOracle",
    "MaceResult",
    "mace",
    "mace_table",
    "GATES",
    "GateModel",
    "gate_expectation",
    "gate_oracle",
    "CAModel",
    "NeighborhoodPrior",
    "ca_estimate_prior",
    "ca_interventional_expectation",
    "ca_oracle",
    "initial_row",
    "maxent_prior",
    "zeros_prior",
    "rule_bit",
    "simulate_rule",
    "ChemicalModel",
    "chemical_expectation",
    "chemical_oracle",
    "ContextEffects",
    "ExternalEffects",
    "dump_external_effects",
    "load_external_effects",
]
