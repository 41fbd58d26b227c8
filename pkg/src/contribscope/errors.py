"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: usage problems exit 1, data problems
exit 2, transport problems exit 3.
"""


class ContribscopeError(Exception):
    """Base class for all toolkit errors."""


class DataError(ContribscopeError):
    """Malformed or inconsistent input data (exit code 2)."""


class BibtexError(DataError):
    """Unparseable BibTeX input; message carries a byte offset."""


class TransportError(ContribscopeError):
    """Remote classification endpoint failure (exit code 3).

    ``partial`` holds whatever per-label results were collected before
    the failure, so callers can salvage completed work.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial if partial is not None else {}
