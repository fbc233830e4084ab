"""Signed causal effects of string completions on a sentiment score.

The outcome ``Y(text)`` is a scalar positivity score, and the effect of
appending completion ``A`` to a base sentence is::

    effect = Y(base + " " + A) - Y(base)

The empty completion has effect 0 by definition and is never sent to the
scorer; whitespace-only or untrimmed completions are rejected because the
single-space join would be ill-defined for them.

:func:`compute_effects` evaluates a word pair over every base sentence of a
:class:`~sentiment_effects.completions.CompletionSpec` and returns the
external-effects document the core decomposition tooling loads: a
``"variables"`` list naming the pair and one context per base sentence with
effect values under the subset keys ``"0"``, ``"1"``, and ``"0,1"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Protocol, runtime_checkable

from .completions import CompletionSpec
from .errors import CompletionError, LexiconFormatError, ModelFetchError

DEFAULT_MODEL = "distilbert-base-uncased-finetuned-sst-2-english"


@runtime_checkable
class Scorer(Protocol):
    """Scalar positivity score for a sentence; higher reads more positive."""

    identifier: str

    def score(self, text: str) -> float: ...


def causal_effect(scorer: Scorer, base: str, completion: str) -> float:
    """Score shift from appending ``completion`` after ``base``."""
    if completion == "":
        return 0.0
    if not completion.strip():
        raise CompletionError("completion is whitespace only")
    if completion != completion.strip():
        raise CompletionError(f"completion {completion!r} has leading or trailing whitespace")
    return scorer.score(f"{base} {completion}") - scorer.score(base)


class _CachedScorer:
    """Memoizes the wrapped scorer so each distinct string is scored once."""

    def __init__(self, inner: Scorer):
        self._inner = inner
        self._seen: dict[str, float] = {}
        self.identifier = inner.identifier

    def score(self, text: str) -> float:
        if text not in self._seen:
            self._seen[text] = float(self._inner.score(text))
        return self._seen[text]


def compute_effects(spec: CompletionSpec, scorer: Scorer) -> dict:
    """Effect document for one word pair over all of the given base sentences.

    Returns a JSON-compatible dict in the external-effects schema, with
    contexts in base-sentence order and the scorer identity recorded in
    metadata. Each base sentence is scored once thanks to memoization, so
    the document stays internally consistent even for stochastic scorers.
    """
    completions = spec.subset_completions()
    cached = _CachedScorer(scorer)
    contexts = []
    for base in spec.bases:
        effects = {
            key: causal_effect(cached, base, completion)
            for key, completion in completions.items()
        }
        contexts.append({"label": base, "effects": effects})
    return {
        "variables": list(spec.pair),
        "contexts": contexts,
        "metadata": {
            "model": scorer.identifier,
            "outcome": "positive-class logit shift",
            "joiner": "single space",
        },
    }


def dump_effects_document(doc: dict) -> str:
    """Serialize an effects document with stable formatting."""
    return json.dumps(doc, indent=2) + "\n"


def _positive_index(config) -> int:
    label2id = getattr(config, "label2id", None) or {}
    for name, idx in label2id.items():
        if str(name).upper() == "POSITIVE":
            return int(idx)
    # common binary convention when labels are unnamed
    return 1


class TransformerScorer:
    """Positivity logit from a pretrained sequence-classification model.

    The score is the raw logit of the positive class, not a softmax
    probability, so differences live on an unbounded signed scale. Loading
    failures (missing runtime stack, unreachable or unknown model) surface
    as :class:`ModelFetchError`.
    """

    def __init__(self, model_id: str = DEFAULT_MODEL):
        try:
            import torch
            from transformers import AutoModelForSequenceClassification, AutoTokenizer
        except ImportError as exc:
            raise ModelFetchError(f"transformers runtime unavailable: {exc}") from exc
        try:
            self._tokenizer = AutoTokenizer.from_pretrained(model_id)
            self._model = AutoModelForSequenceClassification.from_pretrained(model_id)
        except Exception as exc:
            raise ModelFetchError(f"cannot load sentiment model {model_id!r}: {exc}") from exc
        self._torch = torch
        self._model.eval()
        self._positive = _positive_index(self._model.config)
        self.identifier = model_id

    def score(self, text: str) -> float:
        with self._torch.no_grad():
            batch = self._tokenizer(text, return_tensors="pt")
            logits = self._model(**batch).logits
        return float(logits[0, self._positive])


@dataclass(frozen=True)
class LexiconScorer:
    """Deterministic additive scorer for demos, tests, and offline runs.

    Each word contributes its unigram weight, plus a bigram adjustment when
    it directly follows its bigram partner. Weights grow linearly with token
    position at ``position_scale`` per step, so the same completion lands
    slightly differently after bases of different lengths. Matching is
    lowercased and whitespace-tokenized; unknown words score 0.
    """

    unigrams: Mapping[str, float]
    bigrams: Mapping[tuple[str, str], float] = field(default_factory=dict)
    position_scale: float = 0.0
    identifier: str = "lexicon"

    def score(self, text: str) -> float:
        words = text.lower().split()
        total = 0.0
        for pos, word in enumerate(words):
            gain = 1.0 + self.position_scale * pos
            total += self.unigrams.get(word, 0.0) * gain
            if pos:
                total += self.bigrams.get((words[pos - 1], word), 0.0) * gain
        return total

    @classmethod
    def from_file(cls, path) -> "LexiconScorer":
        """Load weights from a JSON file.

        Schema: ``{"unigrams": {word: weight}, "bigrams": {"w0 w1": weight},
        "position_scale": number}``; the last two keys are optional.
        """
        path = Path(path)
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise LexiconFormatError(f"cannot read lexicon {path}: {exc}") from exc
        if not isinstance(doc, dict):
            raise LexiconFormatError(f"{path}: top level must be a JSON object")
        unigrams = doc.get("unigrams")
        if not isinstance(unigrams, dict) or not unigrams:
            raise LexiconFormatError(f"{path}: 'unigrams' must be a nonempty object")
        for word, weight in unigrams.items():
            if isinstance(weight, bool) or not isinstance(weight, (int, float)):
                raise LexiconFormatError(f"{path}: unigram {word!r} weight {weight!r} is not a number")
        bigrams: dict[tuple[str, str], float] = {}
        for key, weight in (doc.get("bigrams") or {}).items():
            words = key.split()
            if len(words) != 2:
                raise LexiconFormatError(f"{path}: bigram key {key!r} must be two space-separated words")
            if isinstance(weight, bool) or not isinstance(weight, (int, float)):
                raise LexiconFormatError(f"{path}: bigram {key!r} weight {weight!r} is not a number")
            bigrams[(words[0], words[1])] = float(weight)
        scale = doc.get("position_scale", 0.0)
        if isinstance(scale, bool) or not isinstance(scale, (int, float)):
            raise LexiconFormatError(f"{path}: 'position_scale' must be a number")
        return cls(
            unigrams={str(w): float(x) for w, x in unigrams.items()},
            bigrams=bigrams,
            position_scale=float(scale),
            identifier=f"lexicon:{path.name}",
        )
