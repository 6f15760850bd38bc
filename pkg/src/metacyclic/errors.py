"""Exception taxonomy shared across the package.

Library code raises these and never calls sys.exit; the CLI maps them to
stable exit codes (see cli.py).
"""


class MetacyclicError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(MetacyclicError, ValueError):
    """Rejected input: not a valid presentation or operation argument."""


class SizeBoundError(MetacyclicError):
    """Requested computation exceeds the documented size bound."""


class InternalInconsistencyError(MetacyclicError):
    """An identity that must hold by construction failed (hard fault)."""
