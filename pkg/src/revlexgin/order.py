"""Terms, ring contexts and the degrevlex order with x_0 < x_1 < ... < x_n.

A term of degree t is larger than any term of smaller degree; between terms of
the same degree the one with the *smaller* exponent at the first index where
they differ is the larger one. So x_0 is the least variable and every term
divisible by x_0 sits below every term of the same degree that is not.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _kernels as K
from .errors import PreconditionError, RingMismatchError


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, slots=True)
class Term:
    """A power product stored as a dense exponent vector."""

    exponents: tuple
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if any(a < 0 for a in exps):
            raise PreconditionError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    @classmethod
    def one(cls, nvars: int) -> "Term":
        return cls((0,) * nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "Term":
        e = [0] * nvars
        e[i] = 1
        return cls(e)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def _check(self, other: "Term"):
        if len(self.exponents) != len(other.exponents):
            raise RingMismatchError(
                f"terms in {len(self.exponents)} and {len(other.exponents)} variables"
            )

    def __mul__(self, other: "Term") -> "Term":
        self._check(other)
        return Term(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Term") -> bool:
        self._check(other)
        return K.divides(self.exponents, other.exponents)

    def __truediv__(self, other: "Term") -> "Term":
        if not other.divides(self):
            raise PreconditionError("term division is not exact")
        return Term(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self):
        """Ascending degrevlex key."""
        return (self.degree, tuple(-a for a in self.exponents))

    def __lt__(self, other):
        self._check(other)
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        self._check(other)
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        self._check(other)
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        self._check(other)
        return self.sort_key() >= other.sort_key()

    def __repr__(self):
        return f"Term({format_term(self.exponents)})"

    def __str__(self):
        return format_term(self.exponents)


_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*$")


@dataclass(frozen=True)
class RingContext:
    """Number of variables and their display names (index 0 is the least)."""

    num_vars: int
    names: tuple = ()

    def __post_init__(self):
        if self.num_vars < 2:
            raise PreconditionError("a ring context needs at least two variables")
        names = tuple(self.names) or tuple(f"x{i}" for i in range(self.num_vars))
        if len(names) != self.num_vars or len(set(names)) != len(names):
            raise PreconditionError(f"bad variable names {names!r}")
        object.__setattr__(self, "names", names)

    @classmethod
    def standard(cls, num_vars: int, first: int = 0) -> "RingContext":
        """Ring on x<first>, ..., x<first+num_vars-1>."""
        return cls(num_vars, tuple(f"x{first + i}" for i in range(num_vars)))

    @property
    def n(self) -> int:
        """Projective dimension: the ring is K[x_0..x_n]."""
        return self.num_vars - 1

    def drop_least(self) -> "RingContext":
        """Ring on the variables other than the least one."""
        return RingContext(self.num_vars - 1, self.names[1:])

    def terms_of_degree(self, t: int) -> list:
        """All exponent tuples of degree t, descending in degrevlex."""
        return sorted(_compositions(t, self.num_vars), key=K.desc_key)

    def format_term(self, e) -> str:
        return format_term(e, self.names)

    def parse_term(self, text: str) -> Term:
        return Term(parse_exponents(text, self.names))


def _compositions(t, k):
    if k == 1:
        yield (t,)
        return
    for a in range(t, -1, -1):
        for rest in _compositions(t - a, k - 1):
            yield (a,) + rest


def format_term(e, names: Sequence[str] | None = None) -> str:
    e = e.exponents if isinstance(e, Term) else e
    if names is None:
        names = [f"x{i}" for i in range(len(e))]
    parts = []
    for name, a in zip(names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"


def parse_exponents(text: str, names: Sequence[str]) -> tuple:
    index = {name: i for i, name in enumerate(names)}
    e = [0] * len(names)
    text = text.strip()
    if text == "1":
        return tuple(e)
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if not m or m.group(1) not in index:
            raise PreconditionError(f"cannot parse term factor {factor!r} in {text!r}")
        e[index[m.group(1)]] += int(m.group(2) or 1)
    return tuple(e)


def compare_degrevlex(a: Term, b: Term) -> Ordering:
    a._check(b)
    ka, kb = a.sort_key(), b.sort_key()
    if ka == kb:
        return Ordering.EQUAL
    return Ordering.GREATER if ka > kb else Ordering.LESS


def min_variable(t: Term) -> int:
    if t.degree == 0:
        raise PreconditionError("the unit term has no minimal variable")
    return K.min_var(t.exponents)


def expand(terms: Iterable[Term]) -> list:
    """All degree-(t+1) multiples of equal-degree terms, ascending, no repeats."""
    terms = list(terms)
    if not terms:
        return []
    nv = terms[0].nvars
    degs = {t.degree for t in terms}
    if len(degs) != 1:
        raise PreconditionError(f"expand needs terms of one degree, got {sorted(degs)}")
    if any(t.nvars != nv for t in terms):
        raise RingMismatchError("terms from different rings")
    exps = [t.exponents for t in terms]
    fast = K.expand(exps)
    # the min-variable split covers every product only for sets closed under
    # tau -> tau * x_i / x_min(tau); otherwise sort the full product set
    full = {e[:i] + (e[i] + 1,) + e[i + 1 :] for e in exps for i in range(nv)}
    if len(full) != len(fast):
        fast = sorted(full, key=K.desc_key, reverse=True)
    return [Term(e) for e in fast]
