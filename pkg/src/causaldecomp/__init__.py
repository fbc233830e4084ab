"""Decompose interventional causal effects over an antichain redundancy lattice.

The pipeline: an intervention oracle answers E[outcome | do(subset = x)] for
every variable subset; the maximal average causal effect (MACE) summarizes
each subset's pull; taking minima over antichains of subsets and
Moebius-inverting on the redundancy lattice splits the total effect into
unique, redundant, and synergistic partial contributions.
"""

from .lattice import (
    MAX_VARIABLES,
    Antichain,
    RedundancyLattice,
    build_lattice,
    canonicalize,
    export_dot,
    is_below,
    lattice_table,
    mobius,
    subset_indices,
    subset_label,
    subset_mask,
)
from .decomposition import (
    COUNTERFACTUAL_Y_CAP,
    KINDS,
    MACE_CAP,
    SIGNED_CE_CAP,
    Decomposition,
    MeasureTable,
    check_monotone,
    decomposition_to_text,
    invert,
    measure_from_text,
    measure_to_text,
    mobius_transform,
    redundant_measure,
    signed_redundant_measure,
    total_synergy,
    zeta_transform,
)
from .models import (
    CAModel,
    ChemicalModel,
    ContextEffects,
    ExternalEffects,
    GATES,
    GateModel,
    InterventionOracle,
    MaceResult,
    NeighborhoodPrior,
    ca_estimate_prior,
    ca_interventional_expectation,
    ca_oracle,
    initial_row,
    chemical_expectation,
    chemical_oracle,
    dump_external_effects,
    gate_expectation,
    gate_oracle,
    load_external_effects,
    mace,
    mace_table,
    maxent_prior,
    rule_bit,
    simulate_rule,
    zeros_prior,
)
from .counterfactual import (
    ActualContext,
    CauseReport,
    contextual_shift,
    decompose_causes,
    y_cap,
)
from . import pipelines

__version__ = "0.1.0"

__all__ = [
    "MAX_VARIABLES",
    "Antichain",
    "RedundancyLattice",
    "build_lattice",
    "canonicalize",
    "export_dot",
    "is_below",
    "lattice_table",
    "mobius",
    "subset_indices",
    "subset_label",
    "subset_mask",
    "COUNTERFACTUAL_Y_CAP",
    "KINDS",
    "MACE_CAP",
    "SIGNED_CE_CAP",
    "Decomposition",
    "MeasureTable",
    "check_monotone",
    "decomposition_to_text",
    "invert",
    "measure_from_text",
    "measure_to_text",
    "mobius_transform",
    "redundant_measure",
    "signed_redundant_measure",
    "total_synergy",
    "zeta_transform",
    "CAModel",
    "ChemicalModel",
    "ContextEffects",
    "ExternalEffects",
    "GATES",
    "GateModel",
    "InterventionOracle",
    "MaceResult",
    "NeighborhoodPrior",
    "ca_estimate_prior",
    "ca_interventional_expectation",
    "ca_oracle",
    "initial_row",
    "chemical_expectation",
    "chemical_oracle",
    "dump_external_effects",
    "gate_expectation",
    "gate_oracle",
    "load_external_effects",
    "mace",
    "mace_table",
    "maxent_prior",
    "rule_bit",
    "simulate_rule",
    "zeros_prior",
    "ActualContext",
    "CauseReport",
    "contextual_shift",
    "decompose_causes",
    "y_cap",
    "pipelines",
    "__version__",
]
