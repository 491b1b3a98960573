"""Exception hierarchy shared across the package."""


class DegmatchError(Exception):
    """Base class for all errors raised by degmatch."""


class InvalidInput(DegmatchError, ValueError):
    """Malformed arguments: bad vertex labels, broken invariants, etc."""


class NotGraphicError(InvalidInput):
    """A degree sequence required to be graphic is not."""


class PreconditionError(InvalidInput):
    """A documented operation precondition does not hold for the input."""


class InvariantViolation(DegmatchError, RuntimeError):
    """An internal state the underlying theory proves unreachable was reached.

    Surfacing these loudly (instead of patching over them) is deliberate:
    they indicate a transcription bug in one of the constructive algorithms.
    """


class ResourceLimitError(DegmatchError, RuntimeError):
    """An exhaustive search exceeded its configured work budget."""
