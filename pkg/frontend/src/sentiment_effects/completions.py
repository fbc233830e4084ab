"""Completion grids for sentiment probing.

A :class:`CompletionSpec` pairs a list of base sentences with one ordered
word pair ``(w0, w1)``. An intervention appends a completion to a base
sentence: ``w0`` alone, ``w1`` alone, or ``"w0 w1"``. The pair order is
fixed, so the joint completion always reads ``w0`` before ``w1``, and words
are joined by single spaces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CompletionError

# the sentences every effect table is computed over, in fixed order
BASE_SENTENCES: tuple[str, ...] = (
    "this movie is",
    "this book is",
    "I found this movie to be",
    "film rating:",
    "my opinion of the film is that it's",
    "the acting was",
    "the plot felt",
    "overall, I thought the picture was",
    "the story is",
    "this film is considered to be",
    "I would describe this movie as",
    "the director's work is",
    "the script is",
    "the new series is",
    "the novel is",
    "what I saw was",
    "the performance was",
    "this show is",
    "the reviewer said it was",
    "my impression was that the film is",
    "the hotel room was",
    "my experience at the museum was",
    "I found the service",
    "Overall experience:",
    "In conclusion, the event was",
)

# canonical pairs: negated, reinforced, and merely intensified "bad"
WORD_PAIRS: tuple[tuple[str, str], ...] = (
    ("not", "bad"),
    ("horribly", "bad"),
    ("really", "bad"),
)


def _checked_word(word, where: str) -> str:
    if not isinstance(word, str) or not word:
        raise CompletionError(f"{where} must be a nonempty string")
    if any(ch.isspace() for ch in word):
        raise CompletionError(f"{where} {word!r} must be a single whitespace-free token")
    return word


@dataclass(frozen=True)
class CompletionSpec:
    """Base sentences plus the ordered word pair appended to them."""

    bases: tuple[str, ...] = BASE_SENTENCES
    pair: tuple[str, str] = WORD_PAIRS[0]

    def __post_init__(self):
        bases = tuple(self.bases)
        if not bases:
            raise CompletionError("base sentence list is empty")
        for pos, base in enumerate(bases):
            if not isinstance(base, str) or not base.strip():
                raise CompletionError(f"base sentence {pos} is empty")
        pair = tuple(self.pair)
        if len(pair) != 2:
            raise CompletionError(f"word pair must have exactly two words, got {len(pair)}")
        _checked_word(pair[0], "pair word 0")
        _checked_word(pair[1], "pair word 1")
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "pair", pair)

    def subset_completions(self) -> dict[str, str]:
        """Completion per nonempty pair subset, keyed like the effects document."""
        w0, w1 = self.pair
        return {"0": w0, "1": w1, "0,1": f"{w0} {w1}"}
