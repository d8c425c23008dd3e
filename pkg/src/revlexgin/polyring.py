"""Sparse polynomials over Q, projective points and linear changes of coordinates."""

from __future__ import annotations

from random import Random
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from . import _kernels as K
from .errors import PreconditionError, RingMismatchError
from .order import RingContext, Term, format_term, parse_exponents

Q = mpq


def to_q(c) -> mpq:
    if isinstance(c, str):
        return mpq(c.strip())
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    return mpq(c)


class Polynomial:
    """A polynomial as a dict from exponent tuples to nonzero rationals."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms: Mapping | None = None):
        self.ring = ring
        out = {}
        for e, c in (terms or {}).items():
            e = e.exponents if isinstance(e, Term) else tuple(e)
            if len(e) != ring.num_vars:
                raise RingMismatchError(f"exponent {e} not in a ring with {ring.num_vars} variables")
            c = to_q(c)
            if c:
                out[e] = out.get(e, 0) + c
        self.terms = {e: c for e, c in out.items() if c}

    @classmethod
    def _raw(cls, ring: RingContext, terms: dict) -> "Polynomial":
        # trusted constructor: keys are exponent tuples, values nonzero mpq
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    @classmethod
    def constant(cls, ring: RingContext, c) -> "Polynomial":
        return cls(ring, {(0,) * ring.num_vars: c})

    @classmethod
    def var(cls, ring: RingContext, i: int) -> "Polynomial":
        return cls(ring, {Term.var(i, ring.num_vars).exponents: 1})

    @classmethod
    def monomial(cls, ring: RingContext, e, c=1) -> "Polynomial":
        return cls(ring, {tuple(e.exponents if isinstance(e, Term) else e): c})

    @classmethod
    def parse(cls, ring: RingContext, text: str) -> "Polynomial":
        return cls(ring, parse_polynomial(text, ring.names))

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> int:
        if not self.terms:
            raise PreconditionError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def lm(self) -> tuple:
        if not self.terms:
            raise PreconditionError("the zero polynomial has no leading term")
        return min(self.terms, key=K.desc_key)

    def leading_term(self):
        """(Term, coefficient) of the degrevlex-largest term."""
        e = self.lm()
        return Term(e), self.terms[e]

    def items(self):
        """(exponent, coeff) pairs, decreasing in degrevlex."""
        return sorted(self.terms.items(), key=lambda it: K.desc_key(it[0]))

    def monic(self) -> "Polynomial":
        inv = 1 / self.terms[self.lm()]
        return Polynomial._raw(self.ring, {e: c * inv for e, c in self.terms.items()})

    def x0_power(self) -> int:
        """Largest k with x_0^k dividing the polynomial."""
        return min((e[0] for e in self.terms), default=0)

    def divide_by_x0_power(self, k: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {(e[0] - k,) + e[1:]: c for e, c in self.terms.items()})

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other):
        if self.ring.num_vars != other.ring.num_vars:
            raise RingMismatchError("polynomials from different rings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = to_q(other)
            if not c:
                return Polynomial._raw(self.ring, {})
            return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.num_vars == other.ring.num_vars and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, point):
        return evaluate(self, point)

    def __str__(self):
        return format_polynomial(self.terms, self.ring.names)

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_NUMBER = re.compile(r"^\d+(?:/\d+)?$")


def parse_polynomial(text: str, names: Sequence[str]) -> dict:
    """Parse a signed sum of ``<rational>*<term>`` monomials."""
    src = text.replace(" ", "")
    if not src:
        raise PreconditionError("empty polynomial text")
    if src == "0":
        return {}
    chunks = re.findall(r"[+-]?[^+-]+", src)
    if "".join(chunks) != src:
        raise PreconditionError(f"cannot parse polynomial {text!r}")
    out = {}
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        body = chunk.lstrip("+-")
        coeff = mpq(sign)
        factors = []
        for part in body.split("*"):
            if _NUMBER.match(part):
                coeff *= mpq(part)
            else:
                factors.append(part)
        e = parse_exponents("*".join(factors) if factors else "1", names)
        out[e] = out.get(e, 0) + coeff
    return {e: c for e, c in out.items() if c}


def format_polynomial(terms: Mapping, names: Sequence[str]) -> str:
    if not terms:
        return "0"
    pieces = []
    for e, c in sorted(terms.items(), key=lambda it: K.desc_key(it[0])):
        mono = format_term(e, names)
        mag = abs(c)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Points, evaluation and linear substitutions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple

    def __post_init__(self):
        coords = tuple(to_q(c) for c in self.coords)
        if not any(coords):
            raise PreconditionError("a projective point needs a nonzero coordinate")
        object.__setattr__(self, "coords", coords)

    def __len__(self):
        return len(self.coords)

    def proportional_to(self, other: "ProjPoint") -> bool:
        a, b = self.coords, other.coords
        return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))

    def combine(self, s, other: "ProjPoint", t) -> "ProjPoint":
        """The point s*self + t*other."""
        return ProjPoint(tuple(s * a + t * b for a, b in zip(self.coords, other.coords)))

    def normalized(self) -> "ProjPoint":
        """Scaled so that the first nonzero coordinate is 1."""
        lead = next(c for c in self.coords if c)
        return ProjPoint(tuple(c / lead for c in self.coords))

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


def evaluate(f: Polynomial, p) -> mpq:
    """Value of f at the coordinates of p (meaningful up to scaling when f is homogeneous)."""
    coords = p.coords if isinstance(p, ProjPoint) else tuple(to_q(c) for c in p)
    if len(coords) != f.ring.num_vars:
        raise RingMismatchError("point and polynomial live in different spaces")
    if not f.is_homogeneous():
        warnings.warn("evaluating a non-homogeneous polynomial at a projective point", stacklevel=2)
    total = mpq(0)
    for e, c in f.terms.items():
        v = c
        for x, a in zip(coords, e):
            if a:
                v *= x ** a
        total += v
    return total


def substitute_linear(f: Polynomial, rows: Sequence[Sequence], target: RingContext) -> Polynomial:
    """Substitute x_i -> sum_j rows[i][j] * y_j with y the variables of ``target``."""
    if len(rows) != f.ring.num_vars:
        raise RingMismatchError("substitution needs one row per variable")
    nt = target.num_vars
    forms = []
    for row in rows:
        if len(row) != nt:
            raise RingMismatchError("substitution rows must match the target ring")
        forms.append(
            Polynomial._raw(
                target,
                {Term.var(j, nt).exponents: to_q(c) for j, c in enumerate(row) if c},
            )
        )
    powers = [{0: Polynomial.constant(target, 1)} for _ in forms]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = power(i, k - 1) * forms[i]
        return cache[k]

    out = {}
    for e, c in f.terms.items():
        prod = None
        for i, a in enumerate(e):
            if a:
                prod = power(i, a) if prod is None else prod * power(i, a)
        if prod is None:
            prod = powers[0][0]
        for e2, c2 in prod.terms.items():
            out[e2] = out.get(e2, 0) + c * c2
    return Polynomial._raw(target, {e: c for e, c in out.items() if c})


class LinearChange:
    """An invertible (n+1)x(n+1) rational matrix acting by x_i -> sum_j g_ij x_j."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Iterable[Iterable]):
        m = tuple(tuple(to_q(c) for c in row) for row in matrix)
        size = len(m)
        if size == 0 or any(len(row) != size for row in m):
            raise PreconditionError("a linear change needs a square matrix")
        _, piv = K.rref([list(r) for r in m], size)
        if len(piv) != size:
            raise PreconditionError("linear change matrix is singular")
        self.matrix = m

    @property
    def size(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, size: int) -> "LinearChange":
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def random(cls, size: int, rng: Random, bound: int = 100) -> "LinearChange":
        while True:
            m = [[rng.randint(-bound, bound) for _ in range(size)] for _ in range(size)]
            try:
                return cls(m)
            except PreconditionError:
                continue

    def inverse(self) -> "LinearChange":
        size = self.size
        aug = [list(row) + [mpq(1) if i == j else mpq(0) for j in range(size)] for i, row in enumerate(self.matrix)]
        rows, _ = K.rref(aug, 2 * size)
        return LinearChange([r[size:] for r in rows])

    def __matmul__(self, other: "LinearChange") -> "LinearChange":
        a, b = self.matrix, other.matrix
        n = self.size
        return LinearChange([[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)])

    def apply_to_point(self, p: ProjPoint) -> ProjPoint:
        """Matrix times column vector."""
        return ProjPoint(tuple(sum(r * c for r, c in zip(row, p.coords)) for row in self.matrix))


def apply_change(f: Polynomial, g: LinearChange) -> Polynomial:
    if g.size != f.ring.num_vars:
        raise RingMismatchError("linear change size does not match the ring")
    return substitute_linear(f, g.matrix, f.ring)


LINE_RING = RingContext(2, ("s", "t"))


def restrict_to_line(f: Polynomial, P: ProjPoint, Q: ProjPoint) -> Polynomial:
    """The binary form f(sP + tQ) in the ring K[s, t]."""
    if P.proportional_to(Q):
        raise PreconditionError("the two points do not span a line")
    if not f.is_homogeneous():
        raise PreconditionError("restriction to a line needs a homogeneous polynomial")
    rows = [(a, b) for a, b in zip(P.coords, Q.coords)]
    return substitute_linear(f, rows, LINE_RING)


def binary_form_coefficients(f: Polynomial, degree: int) -> list:
    """Coefficients of a binary form of the given degree, s^degree first."""
    out = [mpq(0)] * (degree + 1)
    for e, c in f.terms.items():
        if sum(e) != degree:
            raise PreconditionError("not a binary form of the expected degree")
        out[e[1]] = c
    return out


def partial(f: Polynomial, i: int) -> Polynomial:
    """Partial derivative with respect to the i-th variable."""
    out = {}
    for e, c in f.terms.items():
        if e[i]:
            out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
    return Polynomial._raw(f.ring, out)


def gradient_at(f: Polynomial, p: ProjPoint) -> tuple:
    return tuple(evaluate(partial(f, i), p) for i in range(f.ring.num_vars))
