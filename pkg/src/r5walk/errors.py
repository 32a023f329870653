"""Exception types shared across the package.

Each class marks one failure domain so callers (and the CLI exit-code
mapping) can tell bad seeds, bad arguments, malformed state, malformed
result files, and environment problems apart.
"""


class R5WalkError(Exception):
    """Base class for all errors raised by this package."""


class SeedDomainError(R5WalkError, ValueError):
    """Seed value outside the domain of the requested seeding scheme."""


class DomainError(R5WalkError, ValueError):
    """Argument outside an operation's documented domain."""


class StateFormatError(R5WalkError, ValueError):
    """Imported generator state has the wrong shape or out-of-range words."""


class RecordFormatError(R5WalkError, ValueError):
    """Result file cannot be parsed or fails structural validation."""


class UnsupportedSchemaError(RecordFormatError):
    """Result file declares a schema version this build does not support."""


class GitUnavailableError(R5WalkError, RuntimeError):
    """The git executable is missing; distinct from 'not a repository'."""
