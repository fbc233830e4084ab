"""Exception types shared across the package.

Kept in one place so the command line front-end can map them to exit
messages without importing half the package.
"""


class InvalidAntichainError(ValueError):
    """A subset family is not (or cannot be reduced to) a valid antichain."""


class CapacityError(ValueError):
    """Requested variable count is outside the supported range.

    The lattice grows with the Dedekind numbers, which is superexponential
    in the number of variables, so the practical ceiling is hard-coded.
    """


class LatticeLookupError(KeyError):
    """An antichain is not a node of the lattice it was used against."""


class IncompleteMeasureError(ValueError):
    """A measure is missing values for some subsets or lattice nodes."""


class MeasureDomainError(ValueError):
    """Measure values are outside the domain the chosen kind requires."""


class MonotonicityError(ValueError):
    """A measure that must be monotone on the lattice is not.

    Carries the first violating cover pair in the message; this almost
    always indicates a broken intervention oracle upstream.
    """


class NegativePartialError(ValueError):
    """Moebius inversion of a nonnegative-kind measure went negative."""


class OracleDomainError(ValueError):
    """An intervention request does not fit the oracle's declared domains."""


class PriorStateError(RuntimeError):
    """A cellular-automaton model needs an estimated prior it does not have."""


class SteadyStateError(ZeroDivisionError):
    """Baseline steady state is zero, so normalized expectations are undefined."""


class EffectsFormatError(ValueError):
    """An external effects document failed validation; message says where."""


class OutcomeDomainError(ValueError):
    """An outcome table does not satisfy what the requested analysis needs."""
