"""Exception types shared across the package.

The CLI maps these onto exit codes: parameter problems are usage errors,
malformed input and inconsistent artifacts are data errors, and blown
resource caps get their own code so batch drivers can tell them apart.
"""


class ChhError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(ChhError, ValueError):
    """A threshold, tolerance, capacity, or flag value is out of range."""


class MalformedLineError(ChhError, ValueError):
    """An input line could not be parsed as a tab-separated tuple."""

    def __init__(self, line_number: int, line: bytes = b""):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: no tab separator")


class UnsupportedSourceError(ChhError, TypeError):
    """A stream source cannot be replayed but the operation needs multiple passes."""


class ResourceLimitError(ChhError, RuntimeError):
    """An operation exceeded its configured tuple or memory cap."""


class InconsistentInputError(ChhError, ValueError):
    """Two artifacts that must describe the same stream do not agree."""


class SnapshotFormatError(ChhError, ValueError):
    """A sketch snapshot is truncated, corrupt, or of an unknown version."""
