"""Exception types shared by all modules."""


class RevlexError(Exception):
    """Base class for errors raised by revlexgin."""


class PreconditionError(RevlexError, ValueError):
    """Input violates a documented precondition."""


class RingMismatchError(PreconditionError):
    """Objects from different ring contexts were combined."""


class NotAdmissibleError(PreconditionError):
    """A Hilbert function admits no ideal of the requested kind."""


class CertificateError(RevlexError):
    """A certificate that is verified a posteriori did not hold."""


class GenericityError(CertificateError):
    """Random choices failed to certify general position within the budget."""


class EnumerationLimitError(RevlexError):
    """A combinatorial search hit its node cap."""
