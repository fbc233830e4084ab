"""Exception types raised by this package."""


class SentimentEffectsError(Exception):
    """Base class for all errors raised here."""


class CompletionError(SentimentEffectsError):
    """A base sentence, word pair, or completion string is malformed."""


class ModelFetchError(SentimentEffectsError):
    """The sentiment model (or its runtime stack) cannot be loaded."""


class LexiconFormatError(SentimentEffectsError):
    """A lexicon weights file does not match the expected schema."""


class SweepFormatError(SentimentEffectsError):
    """A sweep file is missing the structure a figure panel needs."""
