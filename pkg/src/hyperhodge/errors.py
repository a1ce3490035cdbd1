"""Exception types shared by all modules.

Every violation of an input contract raises a subclass of
:class:`ValidationError`, so callers (notably the CLI) can distinguish
bad input (exit code 1) from genuine computation failures.
"""


class ValidationError(ValueError):
    """An input violates a documented precondition or invariant."""


class NotIncreasing(ValidationError):
    """A parameter sequence is not strictly increasing."""


class OutOfRange(ValidationError):
    """A parameter lies outside its required interval."""


class Resonant(ValidationError):
    """The two parameter sequences share an entry (non-resonance fails)."""


class Empty(ValidationError):
    """Both parameter sequences are empty."""


class NotConfluent(ValidationError):
    """The operation needs more upper than lower parameters (mu > 0)."""


class NotStrong(ValidationError):
    """Strong non-resonance does not hold for the given parameters."""


class SearchExhausted(RuntimeError):
    """The shift search schedule ran out of candidates (implementation bug:
    a valid shift always exists for rational parameters)."""


class NotPolynomial(ValidationError):
    """A genuinely negative power of t survives conversion to Weyl form."""


class NotSplitting(ValidationError):
    """The indicial polynomial does not factor into rational linear terms."""


class LengthMismatch(ValidationError):
    """Two sequences that must have equal length do not."""


class WrongPoint(ValidationError):
    """A nearby-cycle spectrum is tagged with the wrong fiber point."""


class UnitEigenvalue(ValidationError):
    """A monodromy eigenvalue equals 1 where the reindexing forbids it."""


class EmptySpectrum(ValidationError):
    """A spectrum operation needs at least one entry."""


class IndexOutOfRange(ValidationError, IndexError):
    """An index k lies outside 1..n."""


class WrongOrientation(ValidationError):
    """The formula needs n >= m; swap the sequences first."""
