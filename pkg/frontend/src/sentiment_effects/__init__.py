"""Completion effects on a sentiment classifier, and sweep-file figures.

This package measures how appending words to base sentences shifts a
sentiment model's positivity logit, writes those shifts as the
external-effects JSON documents the core decomposition tooling consumes,
and renders figures from the sweep files the core CLI produces.
"""

from .completions import BASE_SENTENCES, WORD_PAIRS, CompletionSpec
from .effects import (
    DEFAULT_MODEL,
    LexiconScorer,
    Scorer,
    TransformerScorer,
    causal_effect,
    compute_effects,
    dump_effects_document,
)
from .errors import (
    CompletionError,
    LexiconFormatError,
    ModelFetchError,
    SentimentEffectsError,
    SweepFormatError,
)
from .figures import read_sweep, render_figure

__all__ = [
    "BASE_SENTENCES",
    "WORD_PAIRS",
    "CompletionSpec",
    "DEFAULT_MODEL",
    "LexiconScorer",
    "Scorer",
    "TransformerScorer",
    "causal_effect",
    "compute_effects",
    "dump_effects_document",
    "CompletionError",
    "LexiconFormatError",
    "ModelFetchError",
    "SentimentEffectsError",
    "SweepFormatError",
    "read_sweep",
    "render_figure",
]
