"""Monomial ideal combinatorics around strongly stable (Borel) ideals.

Hilbert functions are computed by walking the sous-escalier degree by degree
(a degree-(t+1) term is standard iff it is not a generator and all of its
degree-t divisors are standard), so nothing here ever lists a whole graded
piece of the ring unless an operation is defined that way.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from . import _kernels as K
from .errors import (
    CertificateError,
    EnumerationLimitError,
    NotAdmissibleError,
    PreconditionError,
    RingMismatchError,
)
from .order import RingContext, Term, format_term


# ---------------------------------------------------------------------------
# Hilbert functions
# ---------------------------------------------------------------------------


def poly_eval(coeffs: Sequence, t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def interpolate(xs: Sequence[int], ys: Sequence) -> list:
    """Coefficients (constant first) of the polynomial through the points."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        # Lagrange basis polynomial for node i, expanded in the monomial basis
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    return _trim(coeffs)


def _coeff_json(c: Fraction):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class HilbertFunction:
    """Explicit values H(0..len-1) followed by the Hilbert polynomial.

    ``stab`` is the least degree from which every value equals the
    polynomial. ``poly`` lists exact coefficients, constant term first.
    """

    values: tuple
    poly: tuple
    stab: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        object.__setattr__(self, "poly", tuple(Fraction(c) for c in _trim(self.poly)))
        if any(v < 0 for v in self.values):
            raise PreconditionError("Hilbert function values must be non-negative")
        for t in range(self.stab, len(self.values)):
            if poly_eval(self.poly, t) != self.values[t]:
                raise PreconditionError(
                    f"value H({t})={self.values[t]} disagrees with the polynomial past stab={self.stab}"
                )

    @classmethod
    def from_values(cls, values: Sequence[int], poly: Sequence) -> "HilbertFunction":
        """Build from values that already reach the polynomial regime."""
        poly = [Fraction(c) for c in poly]
        stab = len(values)
        while stab > 0 and poly_eval(poly, stab - 1) == values[stab - 1]:
            stab -= 1
        return cls(tuple(values), tuple(poly), stab)

    def __call__(self, t: int) -> int:
        if t < 0:
            return 0
        if t < len(self.values):
            return self.values[t]
        v = poly_eval(self.poly, t)
        if v.denominator != 1 or v < 0:
            raise CertificateError(f"Hilbert polynomial gives {v} at t={t}")
        return int(v)

    def upto(self, t: int) -> list:
        return [self(s) for s in range(t + 1)]

    @property
    def poly_degree(self) -> int:
        return len(self.poly) - 1

    def agrees(self, other: "HilbertFunction") -> bool:
        if self.poly != other.poly:
            return False
        top = max(len(self.values), len(other.values), self.stab, other.stab) + 1
        return all(self(t) == other(t) for t in range(top))

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "poly": [_coeff_json(c) for c in self.poly],
            "stab": self.stab,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HilbertFunction":
        return cls(tuple(obj["values"]), tuple(Fraction(c) for c in obj["poly"]), int(obj["stab"]))

    def poly_str(self, var: str = "t") -> str:
        if not self.poly:
            return "0"
        parts = []
        for k in range(len(self.poly) - 1, -1, -1):
            c = self.poly[k]
            if c == 0:
                continue
            mag = abs(c)
            body = str(mag) if (k == 0 or mag != 1) else ""
            if k >= 1:
                body = (f"{body}*" if body else "") + (var if k == 1 else f"{var}^{k}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


# ---------------------------------------------------------------------------
# Monomial ideals
# ---------------------------------------------------------------------------


class MonomialIdeal:
    """A monomial ideal given by its minimal generators B_J.

    Generators are stored as exponent tuples sorted decreasing in degrevlex.
    """

    __slots__ = ("ring", "gens", "_by_degree")

    def __init__(self, ring: RingContext, gens: Iterable = ()):
        exps = []
        for g in gens:
            e = g.exponents if isinstance(g, Term) else tuple(int(a) for a in g)
            if len(e) != ring.num_vars:
                raise RingMismatchError(f"generator {e} not in a ring with {ring.num_vars} variables")
            exps.append(e)
        self.ring = ring
        self.gens = tuple(sorted(K.minimalize(exps), key=K.desc_key))
        by_deg = {}
        for e in self.gens:
            by_deg.setdefault(sum(e), []).append(e)
        self._by_degree = by_deg

    @classmethod
    def parse(cls, ring: RingContext, texts: Iterable[str]) -> "MonomialIdeal":
        return cls(ring, [ring.parse_term(s) for s in texts])

    @classmethod
    def power_of_maximal(cls, ring: RingContext, k: int) -> "MonomialIdeal":
        return cls(ring, ring.terms_of_degree(k))

    @property
    def nvars(self) -> int:
        return self.ring.num_vars

    @property
    def terms(self) -> list:
        return [Term(e) for e in self.gens]

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(sum(e) == 0 for e in self.gens)

    @property
    def max_degree(self) -> int:
        return max((sum(e) for e in self.gens), default=0)

    def gens_of_degree(self, t: int) -> list:
        return list(self._by_degree.get(t, ()))

    def contains(self, term) -> bool:
        e = term.exponents if isinstance(term, Term) else tuple(term)
        return any(K.divides(g, e) for g in self.gens)

    __contains__ = contains

    def terms_of_degree(self, t: int) -> list:
        """All degree-t terms of J, decreasing."""
        std = set(self.standard_terms(t))
        return [e for e in self.ring.terms_of_degree(t) if e not in std]

    def standard_terms(self, t: int) -> list:
        """Degree-t terms outside J (ascending)."""
        return self.sous_escalier(t)[t]

    def sous_escalier(self, top: int) -> list:
        """Lists N(J)_0, ..., N(J)_top, each ascending in degrevlex."""
        nv = self.nvars
        cur = [] if self.is_unit() else [(0,) * nv]
        out = [cur]
        for t in range(top):
            cur = K.sous_escalier_next(cur, set(self._by_degree.get(t + 1, ())))
            out.append(cur)
        return out

    def _check_ring(self, other: "MonomialIdeal"):
        if self.nvars != other.nvars:
            raise RingMismatchError("monomial ideals in different rings")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.gens == other.gens

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ring(other)
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ring(other)
        return MonomialIdeal(
            self.ring,
            [tuple(map(max, a, b)) for a in self.gens for b in other.gens],
        )

    def quotient_by_variable(self, i: int) -> "MonomialIdeal":
        """J : x_i."""
        out = []
        for e in self.gens:
            if e[i]:
                e = e[:i] + (e[i] - 1,) + e[i + 1:]
            out.append(e)
        return MonomialIdeal(self.ring, out)

    def with_ring(self, ring: RingContext) -> "MonomialIdeal":
        if ring.num_vars != self.nvars:
            raise RingMismatchError("cannot rename into a ring of another size")
        return MonomialIdeal(ring, self.gens)

    def to_json(self) -> dict:
        return {"vars": self.nvars, "gens": [list(e) for e in self.gens]}

    @classmethod
    def from_json(cls, obj: dict, ring: RingContext | None = None) -> "MonomialIdeal":
        ring = ring or RingContext.standard(int(obj["vars"]))
        if ring.num_vars != int(obj["vars"]):
            raise RingMismatchError("JSON ideal does not match the ring")
        return cls(ring, [tuple(g) for g in obj["gens"]])

    def gen_strings(self) -> list:
        return [format_term(e, self.ring.names) for e in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.gen_strings()) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


def monomial_saturation(J: MonomialIdeal) -> MonomialIdeal:
    """J : (x_0, ..., x_n)^infinity by iterated quotients."""
    cur = J
    while True:
        nxt = cur.quotient_by_variable(0)
        for i in range(1, cur.nvars):
            nxt = nxt.intersect(cur.quotient_by_variable(i))
        if nxt == cur:
            return cur
        cur = nxt


def saturate_by_variable(J: MonomialIdeal, i: int = 0) -> MonomialIdeal:
    """J : x_i^infinity by iterating J : x_i until it stops changing."""
    cur = J
    while True:
        nxt = cur.quotient_by_variable(i)
        if nxt == cur:
            return cur
        cur = nxt


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def is_strongly_stable(J: MonomialIdeal) -> bool:
    nv = J.nvars
    for e in J.gens:
        for j in range(nv - 1):
            if not e[j]:
                continue
            for i in range(j + 1, nv):
                moved = list(e)
                moved[j] -= 1
                moved[i] += 1
                if not J.contains(tuple(moved)):
                    return False
    return True


def is_segment_ideal(J: MonomialIdeal, up_to: int | None = None) -> bool:
    """Whether J_t is a degrevlex segment for every t <= up_to."""
    top = J.max_degree if up_to is None else up_to
    if top < J.max_degree:
        raise PreconditionError("up_to must reach the largest generator degree")
    layers = J.sous_escalier(top)
    for t in range(top + 1):
        std = set(layers[t])
        seen_standard = False
        for e in J.ring.terms_of_degree(t):
            if e in std:
                seen_standard = True
            elif seen_standard:
                return False
    return True


def is_almost_revlex(J: MonomialIdeal) -> bool:
    """Every term above a minimal generator of the same degree is in J."""
    if J.is_zero():
        return True
    layers = J.sous_escalier(J.max_degree)
    for t, gens in J._by_degree.items():
        smallest = max(K.desc_key(g) for g in gens)
        for s in layers[t]:
            if K.desc_key(s) < smallest:
                return False
    return True


# ---------------------------------------------------------------------------
# Hilbert function of R/J
# ---------------------------------------------------------------------------


def _certified_from(J: MonomialIdeal) -> int:
    # Taylor resolution: the numerator of the Hilbert series has degree at
    # most deg lcm(B_J), so H(t) is polynomial for t > deg lcm - num_vars.
    if J.is_zero():
        return 0
    lcm = tuple(map(max, *J.gens)) if len(J.gens) > 1 else J.gens[0]
    return max(0, sum(lcm) - J.nvars + 1)


def hilbert_function(J: MonomialIdeal, up_to: int = 0) -> HilbertFunction:
    """Hilbert function of R/J with a certified Hilbert polynomial.

    The polynomial is interpolated on ``num_vars`` values from a degree past
    which the function is provably polynomial and checked on one more.
    """
    nv = J.nvars
    start = _certified_from(J)
    top = max(up_to, start + nv)
    layers = J.sous_escalier(top)
    vals = [len(layer) for layer in layers]
    xs = list(range(start, start + nv))
    poly = interpolate(xs, [vals[x] for x in xs])
    if poly_eval(poly, start + nv) != vals[start + nv]:
        raise CertificateError("Hilbert polynomial failed its stabilization check")
    stab = start
    while stab > 0 and poly_eval(poly, stab - 1) == vals[stab - 1]:
        stab -= 1
    keep = max(up_to, stab) + 1
    return HilbertFunction(tuple(vals[:keep]), tuple(poly), stab)


# ---------------------------------------------------------------------------
# Curve Hilbert functions and numerical invariants
# ---------------------------------------------------------------------------


def curve_poly(d: int, g: int) -> tuple:
    return (Fraction(1 - g), Fraction(d))


def max_hilbert_function(n: int, d: int, g: int, up_to: int = 0) -> HilbertFunction:
    """H(t) = min{C(n+t, n), dt+1-g} for t >= 1 and H(0) = 1."""
    if d < n + g:
        raise PreconditionError(f"need d >= n+g, got n={n} d={d} g={g}")
    vals = [1]
    t = 1
    # C(n+t,n) - (dt+1-g) is convex in t, so once it is >= 0 past its minimum
    # it stays so; stop once the polynomial regime is reached for good.
    while True:
        c, p = comb(n + t, n), d * t + 1 - g
        vals.append(min(c, p))
        if t >= up_to and c >= p and comb(n + t + 1, n) - c >= d:
            break
        t += 1
    return HilbertFunction.from_values(vals, curve_poly(d, g))


def alpha_degree(n: int, d: int, g: int) -> int:
    """Initial degree min{t >= 1 : C(n+t, n) > dt+1-g} of a maximal-rank curve."""
    if d < n + g or g < 0:
        raise PreconditionError(f"need d >= n+g and g >= 0, got n={n} d={d} g={g}")
    t = 1
    while comb(n + t, n) <= d * t + 1 - g:
        t += 1
    return t


def rao_dimensions(H: HilbertFunction, n: int, d: int, g: int, up_to: int) -> list:
    """h^1(I_C(t)) = p(t) - H(t) for 1 <= t <= up_to (index t, zero at t = 0)."""
    out = [0]
    for t in range(1, up_to + 1):
        v = d * t + 1 - g - H(t)
        if v < 0:
            raise PreconditionError(f"H({t})={H(t)} exceeds p({t})={d * t + 1 - g}")
        out.append(v)
    return out


def _binomial_poly(a: int, shift: int) -> list:
    """Coefficients of C(t + shift, a) as a polynomial in t."""
    coeffs = [Fraction(1)]
    for j in range(a):
        c0 = shift - j
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * c0
            nxt[k + 1] += c
        coeffs = nxt
    fa = factorial(a)
    return [c / fa for c in coeffs]


def gotzmann_decomposition(p: Sequence, max_terms: int = 10**6) -> list:
    """Exponents a_1 >= ... >= a_r with p(t) = sum C(t + a_i - i + 1, a_i)."""
    rem = _trim(Fraction(c) for c in p)
    out = []
    while rem:
        a = len(rem) - 1
        if rem[a] < 0:
            raise PreconditionError(f"polynomial {list(p)} has no Gotzmann representation")
        i = len(out) + 1
        b = _binomial_poly(a, a - i + 1)
        rem = _trim(rem[k] - (b[k] if k < len(b) else 0) for k in range(len(rem)))
        out.append(a)
        if len(out) > max_terms:
            raise PreconditionError("Gotzmann decomposition exceeds the term budget")
    return out


def gotzmann_number(p: Sequence) -> int:
    return len(gotzmann_decomposition(p))


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def _codim(ring: RingContext, H: HilbertFunction, t: int) -> int:
    c = comb(ring.n + t, ring.n) - H(t)
    if c < 0:
        raise NotAdmissibleError(f"H({t})={H(t)} exceeds dim R_{t}")
    return c


def almost_revlex_construct(H: HilbertFunction, ring: RingContext, max_degree: int | None = None) -> MonomialIdeal:
    """Greedy degree-by-degree almost revlex ideal with Hilbert function H.

    J_t is the expansion of J_{t-1} plus the largest missing degree-t terms.
    Stops once past ``H.stab`` with the Hilbert function of the generated
    ideal matching H everywhere.
    """
    if H(0) == 0:
        return MonomialIdeal(ring, [(0,) * ring.num_vars])
    if H(0) != 1:
        raise NotAdmissibleError("H(0) must be 1")
    limit = max_degree if max_degree is not None else H.stab + 64
    gens = []
    layer = []
    t = 0
    while True:
        t += 1
        if t > limit:
            raise NotAdmissibleError(f"no almost revlex ideal found through degree {limit}")
        need = _codim(ring, H, t)
        base = K.expand(layer) if layer else []
        if len(base) > need:
            raise NotAdmissibleError(
                f"expansion has {len(base)} terms in degree {t} but only {need} are allowed"
            )
        have = set(base)
        extra = []
        if len(base) < need:
            for e in ring.terms_of_degree(t):
                if e not in have:
                    extra.append(e)
                    if len(base) + len(extra) == need:
                        break
        gens.extend(extra)
        layer = base + extra
        if t >= H.stab:
            J = MonomialIdeal(ring, gens)
            if hilbert_function(J, t).agrees(H):
                return J


def segment_ideal_construct(H: HilbertFunction, ring: RingContext, up_to: int | None = None) -> MonomialIdeal:
    """Ideal whose degree-t part is the top (dim R_t - H(t)) terms, t <= up_to."""
    if H(0) == 0:
        return MonomialIdeal(ring, [(0,) * ring.num_vars])
    top = H.stab + 1 if up_to is None else up_to
    gens = []
    prev = []
    for t in range(1, top + 1):
        need = _codim(ring, H, t)
        seg = ring.terms_of_degree(t)[:need]
        segset = set(seg)
        if prev and not set(K.expand(prev)) <= segset:
            raise NotAdmissibleError(f"top-{need} segment in degree {t} does not contain the expansion")
        prevset = set(K.expand(prev)) if prev else set()
        gens.extend(e for e in seg if e not in prevset)
        prev = seg
    J = MonomialIdeal(ring, gens)
    if top >= H.stab and not hilbert_function(J, top).agrees(H):
        raise NotAdmissibleError(f"segments through degree {top} do not realize H")
    return J


def points_hilbert_function(nvars: int, npoints: int) -> HilbertFunction:
    """Maximal Hilbert function of general points: min{C(n+t, n), npoints}."""
    n = nvars - 1
    vals = [1]
    t = 1
    while True:
        vals.append(min(comb(n + t, n), npoints))
        if comb(n + t, n) >= npoints:
            break
        t += 1
    return HilbertFunction.from_values(vals, (Fraction(npoints),))


def saturate_borel(J: MonomialIdeal) -> MonomialIdeal:
    """Saturation of a strongly stable ideal: set x_0 to 1 in every generator."""
    if not is_strongly_stable(J):
        raise PreconditionError("saturate_borel needs a strongly stable ideal")
    return MonomialIdeal(J.ring, [(0,) + e[1:] for e in J.gens])


def quotient_by_least_variable(J: MonomialIdeal) -> MonomialIdeal:
    """Image of (J, x_0)/(x_0) in the ring on x_1..x_n."""
    if J.nvars < 3:
        raise PreconditionError("quotient by x_0 needs at least three variables")
    return MonomialIdeal(J.ring.drop_least(), [e[1:] for e in J.gens if e[0] == 0])


# ---------------------------------------------------------------------------
# The >> order
# ---------------------------------------------------------------------------


class DGinOrder(str, enum.Enum):
    GREATER = "greater-or-equal"
    LESS = "less-or-equal"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


class PersistenceWarning(UserWarning):
    """A >> comparison was taken below the Gotzmann degree."""


def _compare_at_degree(J: MonomialIdeal, H: MonomialIdeal, t: int) -> DGinOrder:
    # Elementwise domination of the sorted degree-t parts of J and H is the
    # reverse domination of their sorted complements (equal sizes), which are
    # small: |N_t| = H(t).
    nj = sorted(J.standard_terms(t), key=K.desc_key)
    nh = sorted(H.standard_terms(t), key=K.desc_key)
    if len(nj) != len(nh):
        raise PreconditionError(f"degree-{t} parts have different sizes")
    if nj == nh:
        return DGinOrder.EQUAL
    kj = [K.desc_key(e) for e in nj]
    kh = [K.desc_key(e) for e in nh]
    # J >> H iff every complement term of J is <= the matching one of H
    j_ge = all(a >= b for a, b in zip(kj, kh))
    h_ge = all(a <= b for a, b in zip(kj, kh))
    if j_ge:
        return DGinOrder.GREATER
    if h_ge:
        return DGinOrder.LESS
    return DGinOrder.INCOMPARABLE


def compare_at_degree_direct(J: MonomialIdeal, H: MonomialIdeal, t: int) -> DGinOrder:
    """Literal degree-t comparison of the sorted term lists (small t only)."""
    tj = J.terms_of_degree(t)
    th = H.terms_of_degree(t)
    if len(tj) != len(th):
        raise PreconditionError(f"degree-{t} parts have different sizes")
    if tj == th:
        return DGinOrder.EQUAL
    ge = all(K.desc_key(a) <= K.desc_key(b) for a, b in zip(tj, th))
    le = all(K.desc_key(a) >= K.desc_key(b) for a, b in zip(tj, th))
    if ge:
        return DGinOrder.GREATER
    if le:
        return DGinOrder.LESS
    return DGinOrder.INCOMPARABLE


def dgin_compare(J: MonomialIdeal, H: MonomialIdeal, degree_cap: int = 400) -> DGinOrder:
    """Compare two monomial ideals with one Hilbert polynomial under >>.

    The comparison is made at the Gotzmann number r of the common Hilbert
    polynomial. When r exceeds ``degree_cap`` it is made at the largest
    generator degree m instead, and only if the outcome at m and m+1 agree;
    a PersistenceWarning is emitted in that case.
    """
    J._check_ring(H)
    pj = hilbert_function(J).poly
    if pj != hilbert_function(H).poly:
        raise PreconditionError("ideals have different Hilbert polynomials")
    r = gotzmann_number(pj)
    if r <= degree_cap:
        return _compare_at_degree(J, H, r)
    m = max(J.max_degree, H.max_degree)
    a, b = _compare_at_degree(J, H, m), _compare_at_degree(J, H, m + 1)
    if a != b:
        raise PreconditionError(
            f"Gotzmann number {r} exceeds the cap and degrees {m}, {m + 1} disagree"
        )
    warnings.warn(
        f"compared at degree {m} instead of the Gotzmann number {r}", PersistenceWarning, stacklevel=2
    )
    return a


# ---------------------------------------------------------------------------
# Enumeration and screening
# ---------------------------------------------------------------------------


def _borel_extensions(cands, base, need, counter, node_cap):
    """All size-``need`` subsets S of ``cands`` with base | S Borel-closed.

    ``cands`` is decreasing in degrevlex, so every elementary move
    x_{j+1}/x_j of a candidate has been decided before the candidate.
    """
    chosen = set()
    picked = []
    nv = len(cands[0]) if cands else 0

    def up_moves_ok(e):
        for j in range(nv - 1):
            if e[j]:
                m = list(e)
                m[j] -= 1
                m[j + 1] += 1
                m = tuple(m)
                if m not in base and m not in chosen:
                    return False
        return True

    def rec(i, left):
        counter[0] += 1
        if counter[0] > node_cap:
            raise EnumerationLimitError(f"strongly stable enumeration exceeded {node_cap} nodes")
        if left == 0:
            yield list(picked)
            return
        if len(cands) - i < left:
            return
        e = cands[i]
        if up_moves_ok(e):
            chosen.add(e)
            picked.append(e)
            yield from rec(i + 1, left - 1)
            picked.pop()
            chosen.discard(e)
        yield from rec(i + 1, left)

    yield from rec(0, need)


def enumerate_strongly_stable(
    H: HilbertFunction,
    ring: RingContext,
    saturated_only: bool = False,
    max_gen_degree: int | None = None,
    node_cap: int = 10**6,
) -> list:
    """Strongly stable ideals with Hilbert function H and generators in degree <= max_gen_degree.

    Degree-by-degree DFS: each degree keeps the expansion of the previous one
    and adds a Borel-closed set of new generators of the required size. With
    ``saturated_only`` no generator may be divisible by x_0.
    """
    if H(0) == 0:
        return [MonomialIdeal(ring, [(0,) * ring.num_vars])]
    if H(0) != 1:
        raise NotAdmissibleError("H(0) must be 1")
    top = H.stab + 1 if max_gen_degree is None else max_gen_degree
    if top < H.stab:
        raise PreconditionError(f"max_gen_degree {top} is below the stabilization degree {H.stab}")
    counter = [0]
    found = []
    terms_cache = {}

    def terms(t):
        if t not in terms_cache:
            terms_cache[t] = ring.terms_of_degree(t)
        return terms_cache[t]

    def rec(t, layer, gens):
        if t > top:
            J = MonomialIdeal(ring, gens)
            if hilbert_function(J, top).agrees(H):
                found.append(J)
            return
        need = _codim(ring, H, t)
        base = K.expand(layer) if layer else []
        if len(base) > need:
            return
        baseset = set(base)
        cands = [
            e for e in terms(t)
            if e not in baseset and not (saturated_only and e[0])
        ]
        for extra in _borel_extensions(cands, baseset, need - len(base), counter, node_cap):
            rec(t + 1, base + extra, gens + extra)

    rec(1, [], [])
    found.sort(key=lambda J: [K.desc_key(e) for e in J.gens])
    return found


def brute_force_strongly_stable(H: HilbertFunction, ring: RingContext, max_gen_degree: int) -> list:
    """Reference enumeration: filter every antichain of terms of degree <= max_gen_degree.

    Exponential; only for tiny rings in tests.
    """
    from itertools import combinations

    pool = [e for t in range(1, max_gen_degree + 1) for e in ring.terms_of_degree(t)]
    out = set()
    for k in range(0, len(pool) + 1):
        for subset in combinations(pool, k):
            if len(K.minimalize(subset)) != k:
                continue
            J = MonomialIdeal(ring, subset)
            if is_strongly_stable(J) and hilbert_function(J, max_gen_degree).agrees(H):
                out.add(J)
    return sorted(out, key=lambda J: [K.desc_key(e) for e in J.gens])


def section_target(n: int, d: int) -> MonomialIdeal:
    """Saturated segment ideal of d general points in the hyperplane x_0 = 0."""
    ring = RingContext.standard(n, first=1)
    return segment_ideal_construct(points_hilbert_function(n, d), ring)


def screen_candidates(n: int, d: int, g: int, max_gen_degree: int | None = None, node_cap: int = 10**6) -> list:
    """Saturated strongly stable ideals with the maximal curve Hilbert function
    whose general hyperplane section is the segment ideal of d points.

    Generators are searched through degree alpha_d + 1 by default, the
    regularity bound for a general non-aCM curve.
    """
    H = max_hilbert_function(n, d, g)
    ring = RingContext.standard(n + 1)
    top = max_gen_degree if max_gen_degree is not None else max(alpha_degree(n, d, g) + 1, H.stab)
    target = section_target(n, d)
    out = []
    for J in enumerate_strongly_stable(H, ring, saturated_only=True, max_gen_degree=top, node_cap=node_cap):
        section = saturate_borel(quotient_by_least_variable(J))
        if section.gens == target.gens:
            out.append(J)
    return out


# ---------------------------------------------------------------------------
# Minimal-degree (aCM) curves
# ---------------------------------------------------------------------------


def acm_genera(n: int) -> list:
    c = comb(n, 2)
    return sorted({0, 1, 2, c - 2, c - 1, c})


def acm_gin(n: int, g: int) -> MonomialIdeal:
    """Almost revlex ideal of a general curve of minimal degree d = n + g."""
    if n < 3 or g not in acm_genera(n):
        raise PreconditionError(f"genus {g} is not one of the aCM cases {acm_genera(n)} for n={n}")
    return almost_revlex_construct(max_hilbert_function(n, n + g, g), RingContext.standard(n + 1))


ACM_LINES = ("0", "1", "2", "c-2", "c-1", "c")


def acm_lines(n: int, g: int) -> list:
    """Which listed aCM cases (c = C(n,2)) a genus falls under; may be several."""
    c = comb(n, 2)
    value = {"0": 0, "1": 1, "2": 2, "c-2": c - 2, "c-1": c - 1, "c": c}
    return [line for line in ACM_LINES if value[line] == g]


def acm_listed_generators(n: int, line: str, reverse_indices: bool = True) -> MonomialIdeal:
    """Generator set listed for one aCM case, read in this package's convention.

    The listing writes the top variables as x_0..x_{n-2}; with
    ``reverse_indices`` the index i is read as n - i so that x_0 stays the
    least variable. ``reverse_indices=False`` is the literal reading.
    """
    if n < 3 or line not in ACM_LINES:
        raise PreconditionError(f"unknown aCM case {line!r} for n={n}")
    ring = RingContext.standard(n + 1)

    def pos(i):
        return n - i if reverse_indices else i

    def x(*idx):
        e = [0] * (n + 1)
        for i in idx:
            e[pos(i)] += 1
        return tuple(e)

    listed = {pos(i) for i in range(n - 1)}

    def block(k):
        # degree-k terms in the listed variables x_0..x_{n-2}
        return [e for e in ring.terms_of_degree(k) if all(i in listed for i, a in enumerate(e) if a)]

    if line == "c":
        gens = block(3)
    elif line == "c-1":
        gens = [x(0, 0)] + block(3)
    elif line == "c-2":
        gens = [x(0, 0), x(0, 1)] + block(3)
    elif line == "0":
        gens = block(2)
    elif line == "1":
        gens = [x(n - 2, n - 2, n - 2)] + [e for e in block(2) if e != x(n - 2, n - 2)]
    else:
        drop = (x(n - 2, n - 2), x(n - 2, n - 3))
        gens = [x(n - 2, n - 2, n - 2), x(n - 2, n - 2, n - 3)] + [e for e in block(2) if e not in drop]
    return MonomialIdeal(ring, gens)
