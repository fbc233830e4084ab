"""Externally measured causal effects, exchanged as a JSON document.

Schema::

    {
      "variables": ["not", "bad"],
      "contexts": [
        {"label": "this movie is",
         "effects": {"0": -0.4, "1": -3.1, "0,1": 1.2}},
        ...
      ],
      "metadata": {...}            # optional, passed through untouched
    }

Effect keys are comma-joined variable indices; every nonempty subset of the
variables must be present in every context. This is the hand-off format for
effect producers (e.g. language-model probes) that live outside this package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from ..errors import EffectsFormatError
from ..lattice import MAX_VARIABLES, subset_label


@dataclass(frozen=True)
class ContextEffects:
    """Signed effects for one context, keyed by subset bitmask."""

    label: str
    effects: Mapping[int, float]


@dataclass(frozen=True)
class ExternalEffects:
    variables: tuple[str, ...]
    contexts: tuple[ContextEffects, ...]
    metadata: Mapping = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.variables)


def _parse_subset_key(key: str, n: int, where: str) -> int:
    try:
        parts = [int(p) for p in key.split(",")]
    except ValueError:
        raise EffectsFormatError(f"{where}: effect key {key!r} is not a comma-joined index list") from None
    mask = 0
    for i in parts:
        if not 0 <= i < n:
            raise EffectsFormatError(
                f"{where}: effect key {key!r} names variable {i}, but only {n} variables are declared"
            )
        if mask >> i & 1:
            raise EffectsFormatError(f"{where}: effect key {key!r} repeats variable {i}")
        mask |= 1 << i
    if mask == 0:
        raise EffectsFormatError(f"{where}: effect key {key!r} is empty")
    return mask


def _parse_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise EffectsFormatError(f"{where}: effect value {value!r} is not a number")
    return float(value)


def load_external_effects(source) -> ExternalEffects:
    """Load and validate an effects document.

    ``source`` may be a path (str or Path) or an open text handle. Errors
    carry the context label or index of the offending entry.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = json.load(source)

    if not isinstance(doc, dict):
        raise EffectsFormatError("top level must be a JSON object")
    variables = doc.get("variables")
    if (
        not isinstance(variables, list)
        or not variables
        or not all(isinstance(v, str) and v for v in variables)
    ):
        raise EffectsFormatError("'variables' must be a nonempty list of nonempty strings")
    n = len(variables)
    if n > MAX_VARIABLES:
        raise EffectsFormatError(f"{n} variables declared; at most {MAX_VARIABLES} supported")
    contexts_raw = doc.get("contexts")
    if not isinstance(contexts_raw, list) or not contexts_raw:
        raise EffectsFormatError("'contexts' must be a nonempty list")

    full = (1 << n) - 1
    contexts = []
    for pos, ctx in enumerate(contexts_raw):
        if not isinstance(ctx, dict):
            raise EffectsFormatError(f"context {pos} is not an object")
        label = ctx.get("label")
        where = f"context {pos}" + (f" ({label!r})" if isinstance(label, str) else "")
        if not isinstance(label, str) or not label:
            raise EffectsFormatError(f"{where}: 'label' must be a nonempty string")
        effects_raw = ctx.get("effects")
        if not isinstance(effects_raw, dict):
            raise EffectsFormatError(f"{where}: 'effects' must be an object")
        effects: dict[int, float] = {}
        for key, value in effects_raw.items():
            mask = _parse_subset_key(str(key), n, where)
            if mask in effects:
                raise EffectsFormatError(
                    f"{where}: subset {subset_label(mask)} appears more than once"
                )
            effects[mask] = _parse_number(value, f"{where}, key {key!r}")
        missing = [m for m in range(1, full + 1) if m not in effects]
        if missing:
            raise EffectsFormatError(
                f"{where}: missing effect for subset {subset_label(missing[0])}"
            )
        contexts.append(ContextEffects(label=label, effects=effects))

    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise EffectsFormatError("'metadata' must be an object when present")
    return ExternalEffects(
        variables=tuple(variables), contexts=tuple(contexts), metadata=metadata
    )


def dump_external_effects(effects: ExternalEffects) -> str:
    """Serialize back to the document schema (canonical key order)."""
    doc = {
        "variables": list(effects.variables),
        "contexts": [
            {
                "label": ctx.label,
                "effects": {
                    ",".join(str(i) for i in range(effects.n) if mask >> i & 1): ctx.effects[mask]
                    for mask in sorted(ctx.effects)
                },
            }
            for ctx in effects.contexts
        ],
    }
    if effects.metadata:
        doc["metadata"] = dict(effects.metadata)
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
