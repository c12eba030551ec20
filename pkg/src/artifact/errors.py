"""Exception hierarchy shared by all phases.

The CLI maps these onto its exit codes: input problems exit 2, failed
internal audits exit 3.
"""


class MapError(Exception):
    """Base class for every error raised by this package."""


class InvalidInstance(MapError):
    """The input graph violates a MAP precondition."""


class ParseError(InvalidInstance):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(MapError):
    """An operation was called on an instance outside its domain."""


class CapExceeded(MapError):
    """An exact oracle was asked to solve an instance above its edge cap."""


class InternalError(MapError):
    """A property that the analysis guarantees did not hold."""


class ImpossibleCase(InternalError):
    def __init__(self, tag, detail=""):
        self.tag = tag
        super().__init__(f"impossible configuration {tag!r} {detail}".strip())


class CreditError(InternalError):
    """A payment could not be financed from the designated credit sources."""


class AuditFailure(InternalError):
    def __init__(self, phase, violations):
        self.phase = phase
        self.violations = list(violations)
        head = "; ".join(self.violations[:5])
        super().__init__(f"credit audit failed after {phase}: {head}")
