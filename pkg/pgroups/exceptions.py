"""Errors raised by the pgroups library.

Commands and views map these onto exit codes and HTTP statuses; see
``exit_code_for`` and ``http_status_for`` in ``pgroups.utils``.
"""


class GroupComputationError(Exception):
    """Base class for every error raised by the library."""


class PresentationError(GroupComputationError, ValueError):
    """Malformed presentation: bad prime, index out of range, non-echelon word."""


class InconsistentPresentationError(GroupComputationError):
    """A presentation failed the overlap test where consistency is required."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class NotCentralError(GroupComputationError):
    """A subgroup passed as central does not commute with every generator."""


class NotApplicableError(GroupComputationError):
    """A structural precondition of the operation does not hold."""


class ResourceCapExceeded(GroupComputationError):
    """An enumeration, table or oracle cap was exceeded."""

    def __init__(self, what, size, cap):
        super().__init__(f'{what}: size {size} exceeds cap {cap}')
        self.what = what
        self.size = size
        self.cap = cap


class MultiplierSoundnessError(GroupComputationError):
    """The free rank of R/[F,R] disagrees with d(G); an implementation bug."""


class InvalidTableError(GroupComputationError, ValueError):
    """A multiplication table is not a group table, or not of a p-group."""


class SpecSyntaxError(GroupComputationError, ValueError):
    """Unparseable group spec; ``position`` is the offending character index."""

    def __init__(self, message, position=0):
        super().__init__(f'{message} (at position {position})')
        self.position = position


class SpecParameterError(GroupComputationError, ValueError):
    """Unknown family, unknown parameter, or a parameter out of range."""


class BoundDomainError(GroupComputationError, ValueError):
    """Bound formula evaluated outside its domain or at a non-integer value."""


class DimensionMismatchError(GroupComputationError, ValueError):
    """Matrix shape does not match the declared generator count."""
