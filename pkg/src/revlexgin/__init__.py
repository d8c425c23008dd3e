"""Exact commutative-algebra toolkit for initial ideals of rational curves."""

from ._kernels import BACKEND
from .errors import (
    CertificateError,
    EnumerationLimitError,
    GenericityError,
    NotAdmissibleError,
    PreconditionError,
    RevlexError,
    RingMismatchError,
)
from .order import Ordering, RingContext, Term, compare_degrevlex, expand, min_variable

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CertificateError",
    "EnumerationLimitError",
    "GenericityError",
    "NotAdmissibleError",
    "PreconditionError",
    "RevlexError",
    "RingMismatchError",
    "Ordering",
    "RingContext",
    "Term",
    "compare_degrevlex",
    "expand",
    "min_variable",
]
