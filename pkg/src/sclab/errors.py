"""Exception taxonomy shared by all modules.

The CLI maps these onto exit codes: usage problems exit 1 (argparse),
WorkbenchError subclasses exit 2, PnmError and OS-level I/O failures exit 3.
"""


class WorkbenchError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(WorkbenchError):
    """Invalid generator or operation parameters (bad base, non-prime, zero seed...)."""


class DomainError(WorkbenchError):
    """Operands violate an operation's domain (length mismatch, value out of range...)."""


class GenerationError(WorkbenchError):
    """A generator could not produce the requested output (exhausted, infeasible)."""


class ParseError(WorkbenchError):
    """Malformed input file (bit-stream or raster)."""


class PnmError(ParseError):
    """Malformed PNM data. Carries the byte offset where parsing failed."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset
