"""Exception hierarchy shared by all modules.

Two families matter for the CLI exit-code contract: DomainError (bad or
inadmissible input, exit 2) and CertificationError (a computation could not
be certified, exit 3).  Parse failures raise ParseError (exit 1).
"""


class EquidegError(Exception):
    """Base class for all package errors."""


class ParseError(EquidegError):
    """Malformed JSON or schema violation at an external interface."""


class DomainError(EquidegError):
    """Input violates a precondition of an operation."""


class CertificationError(EquidegError):
    """A result could not be certified; never downgraded to a guess."""


# -- group_core ---------------------------------------------------------------

class InvalidPermutation(DomainError):
    pass


class ClosureExceedsCap(DomainError):
    pass


class NotASubgroup(DomainError):
    pass


# -- rep_lin ------------------------------------------------------------------

class DimensionMismatch(DomainError):
    pass


class NotInvariant(DomainError):
    pass


# -- burnside -----------------------------------------------------------------

class NonIntegralSolve(CertificationError):
    """Exact triangular solve produced a non-integer where the theory
    guarantees integrality; signals a bad degree or an implementation bug."""


class UnknownGroup(DomainError):
    pass


# -- degree -------------------------------------------------------------------

class BoundaryZeroSuspected(CertificationError):
    """Admissibility certification failed after maximal refinement."""


class DegenerateZero(CertificationError):
    """A located zero has Jacobian determinant below tolerance."""


class UnsupportedDimension(DomainError):
    pass


# -- schwartz -----------------------------------------------------------------

class NotSpanned(DomainError):
    """No truncation up to the cap certifies the Galerkin span condition."""


class InadmissibleRadius(CertificationError):
    pass


class NoAdmissibleRadius(CertificationError):
    pass


class OperatorMismatch(DomainError):
    pass


class GroupMismatch(DomainError):
    pass


class EigenvalueOnOne(DomainError):
    pass
