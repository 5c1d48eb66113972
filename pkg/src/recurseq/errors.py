"""Exception hierarchy shared by every module."""


class RecurseqError(Exception):
    code = "ERROR"


class DomainError(RecurseqError, ValueError):
    """An operation was called outside its mathematical domain."""

    code = "DOMAIN"


class BoundExceeded(RecurseqError):
    """A modular scan ran past its configured state cap."""

    code = "BOUND_EXCEEDED"

    def __init__(self, message, modulus=None, steps=None):
        super().__init__(message)
        self.modulus = modulus
        self.steps = steps


class CapExceeded(RecurseqError):
    """prime_index reached j_cap with p^j still a null divisor."""

    code = "CAP_EXCEEDED"

    def __init__(self, message, p=None, j_cap=None, note=None):
        super().__init__(message)
        self.p = p
        self.j_cap = j_cap
        self.note = note


class VerificationFailure(RecurseqError):
    """A theorem verifier rejected its input or could not confirm its claim.

    ``code`` is one of PRECONDITION_DEGENERATE, PRECONDITION_ORDER,
    GROWTH_UNCONFIRMED, HYPOTHESIS_FAILED or GROWTH_NOT_OBSERVED.
    """

    def __init__(self, code, message, witness=None, report=None):
        super().__init__(message)
        self.code = code
        self.witness = witness
        self.report = report
