"""Reduced Gröbner bases over Q, initial ideals, saturation and generic initial ideals.

Orders
------
``degrevlex``: the order of :mod:`revlexgin.order` (x_0 least).

``block:k``: elimination order for the first ``k`` variables. Two exponent
vectors ``a`` and ``b`` are compared by the key

    (-|a[:k]|, a_0, ..., a_{k-1}, -|a[k:]|, a_k, ..., a_n)

where a smaller key means a larger term. In words: first compare the prefix
parts by degrevlex on the prefix variables (larger prefix degree wins, ties
go to the smaller exponent at the first differing prefix index); if the
prefix parts are equal compare the remaining parts the same way. Any term
involving a prefix variable is larger than every term free of them.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from gmpy2 import mpq

from . import _kernels as K
from .borel import HilbertFunction, MonomialIdeal, hilbert_function, is_strongly_stable
from .errors import GenericityError, PreconditionError, RingMismatchError
from .order import RingContext
from .polyring import LinearChange, Polynomial, apply_change


@dataclass(frozen=True)
class MonomialOrder:
    """A term order: plain degrevlex, or block elimination of the first ``eliminate`` variables."""

    eliminate: int = 0
    block: bool = False

    @classmethod
    def degrevlex(cls) -> "MonomialOrder":
        return cls()

    @classmethod
    def elimination(cls, k: int) -> "MonomialOrder":
        if k < 0:
            raise PreconditionError("cannot eliminate a negative number of variables")
        return cls(k, True)

    @classmethod
    def from_tag(cls, tag: str) -> "MonomialOrder":
        if tag == "degrevlex":
            return cls()
        if tag.startswith("block:"):
            return cls.elimination(int(tag[6:]))
        raise PreconditionError(f"unknown order tag {tag!r}")

    @property
    def tag(self) -> str:
        return f"block:{self.eliminate}" if self.block else "degrevlex"

    @property
    def is_degrevlex(self) -> bool:
        return not self.block

    def key_function(self):
        """Key under which smaller means larger term."""
        if not self.block:
            return K.desc_key
        k = self.eliminate

        def key(e):
            return (-sum(e[:k]),) + e[:k] + (-sum(e[k:]),) + e[k:]

        return key


# ---------------------------------------------------------------------------
# Raw Buchberger on dict polynomials
# ---------------------------------------------------------------------------


def _lm(f, key):
    return min(f, key=key)


def _monic(f, lm):
    inv = 1 / f[lm]
    return {e: c * inv for e, c in f.items()}


def _wdeg(e, weights):
    return sum(a * w for a, w in zip(e, weights))


def _lcm(a, b):
    return tuple(map(max, a, b))


def _coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def _spoly(f, lf, g, lg):
    """S-polynomial of two monic polynomials with leading exponents lf, lg."""
    l = _lcm(lf, lg)
    qf = tuple(x - y for x, y in zip(l, lf))
    qg = tuple(x - y for x, y in zip(l, lg))
    out = {}
    for e, c in f.items():
        m = tuple(a + b for a, b in zip(e, qf))
        out[m] = c
    for e, c in g.items():
        m = tuple(a + b for a, b in zip(e, qg))
        v = out.get(m, 0) - c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _as_reducer(f, lm):
    return (lm, [(e, c) for e, c in f.items() if e != lm])


@dataclass
class BuchbergerStats:
    pairs_considered: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0


def buchberger_raw(polys, key, weights, stats: BuchbergerStats | None = None):
    """Reduced monic Gröbner basis of dict polynomials.

    Pairs are handled with the Gebauer-Möller installation of Buchberger's
    product and chain criteria and selected by (sugar, lcm) with the smallest
    lcm first. Returns a list of ``(lm, poly)`` sorted increasing by ``lm``.
    """
    stats = stats if stats is not None else BuchbergerStats()
    polys_all = []  # (lm, poly, sugar)
    active = []  # indices into polys_all
    pairs = []  # heap of (sugar, asc position, serial, i, j)
    serial = 0

    def reducers():
        return [_as_reducer(polys_all[i][1], polys_all[i][0]) for i in active]

    def insert(f, sugar):
        nonlocal serial, active
        lm = _lm(f, key)
        f = _monic(f, lm)
        h = len(polys_all)
        polys_all.append((lm, f, sugar))
        # Gebauer-Möller update
        lcms = {g: _lcm(lm, polys_all[g][0]) for g in active}
        cand = list(active)
        kept = []
        while cand:
            g = cand.pop(0)
            lhg = lcms[g]
            if _coprime(lm, polys_all[g][0]) or not any(K.divides(lcms[o], lhg) for o in cand + kept):
                kept.append(g)
        new_pairs = [g for g in kept if not _coprime(lm, polys_all[g][0])]
        survivors = []
        for entry in pairs:
            i, j = entry[3], entry[4]
            lij = _lcm(polys_all[i][0], polys_all[j][0])
            if (
                K.divides(lm, lij)
                and _lcm(polys_all[i][0], lm) != lij
                and _lcm(polys_all[j][0], lm) != lij
            ):
                continue
            survivors.append(entry)
        pairs[:] = survivors
        heapq.heapify(pairs)
        for g in new_pairs:
            lg, _, sg = polys_all[g]
            l = lcms[g]
            s = max(sugar + _wdeg(l, weights) - _wdeg(lm, weights), sg + _wdeg(l, weights) - _wdeg(lg, weights))
            serial += 1
            heapq.heappush(pairs, (s, _asc(l, key), serial, g, h))
        active = [g for g in active if not K.divides(lm, polys_all[g][0])] + [h]

    for f in polys:
        f = {e: mpq(c) for e, c in f.items() if c}
        if not f:
            continue
        sugar = max(_wdeg(e, weights) for e in f)
        if active:
            f = K.normal_form(f, reducers(), key, True)
            if not f:
                continue
        insert(f, sugar)

    while pairs:
        s, _, _, i, j = heapq.heappop(pairs)
        stats.pairs_considered += 1
        li, fi, _ = polys_all[i]
        lj, fj, _ = polys_all[j]
        sp = _spoly(fi, li, fj, lj)
        stats.pairs_reduced += 1
        h = K.normal_form(sp, reducers(), key, True) if sp else {}
        if not h:
            stats.zero_reductions += 1
            continue
        insert(h, s)

    # minimal basis from the active set, then interreduce
    basis = [(polys_all[i][0], polys_all[i][1]) for i in active]
    basis.sort(key=lambda b: key(b[0]), reverse=True)
    out = []
    for idx, (lm, f) in enumerate(basis):
        others = [_as_reducer(g, lg) for k2, (lg, g) in enumerate(basis) if k2 != idx]
        tail = {e: c for e, c in f.items() if e != lm}
        tail = K.normal_form(tail, others, key, True) if tail else {}
        tail[lm] = mpq(1)
        out.append((lm, tail))
    return out


def _asc(e, key):
    # heap position: larger term sorts later; negate the descending key
    return tuple(-x for x in key(e))


# ---------------------------------------------------------------------------
# Gröbner basis objects
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Gröbner basis, sorted increasing by leading term."""

    ring: RingContext
    order: MonomialOrder
    polys: tuple
    stats: BuchbergerStats = field(default_factory=BuchbergerStats, compare=False, repr=False)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def leading_exponents(self) -> list:
        key = self.order.key_function()
        return [min(f.terms, key=key) for f in self.polys]

    def reducers(self):
        return [_as_reducer(f.terms, lm) for f, lm in zip(self.polys, self.leading_exponents())]

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring.num_vars != self.ring.num_vars:
            raise RingMismatchError("polynomial and basis live in different rings")
        rem = K.normal_form(f.terms, self.reducers(), self.order.key_function(), True) if f.terms else {}
        return Polynomial._raw(self.ring, rem)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def is_unit(self) -> bool:
        return any(not any(lm) for lm in self.leading_exponents())

    def of_degree(self, t: int) -> list:
        return [f for f in self.polys if f.terms and f.degree == t and f.is_homogeneous()]

    def to_json(self) -> dict:
        return {"vars": list(self.ring.names), "order": self.order.tag, "polys": [str(f) for f in self.polys]}

    @classmethod
    def from_json(cls, obj: dict) -> "GroebnerBasis":
        names = tuple(obj["vars"])
        ring = RingContext(len(names), names)
        polys = [Polynomial.parse(ring, s) for s in obj["polys"]]
        return buchberger(polys, MonomialOrder.from_tag(obj.get("order", "degrevlex")), ring=ring)


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    weights: Sequence[int] | None = None,
    ring: RingContext | None = None,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    ``weights`` only steers the sugar-based pair selection (default: total
    degree); the result does not depend on it.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise PreconditionError("buchberger needs at least one generator or a ring")
        ring = gens[0].ring
    for f in gens:
        if f.ring.num_vars != ring.num_vars:
            raise RingMismatchError("generators from different rings")
    order = order or MonomialOrder.degrevlex()
    if order.eliminate > ring.num_vars:
        raise PreconditionError("cannot eliminate more variables than the ring has")
    weights = tuple(weights) if weights is not None else (1,) * ring.num_vars
    key = order.key_function()
    stats = BuchbergerStats()
    raw = buchberger_raw([f.terms for f in gens], key, weights, stats)
    polys = tuple(Polynomial._raw(ring, f) for _, f in raw)
    return GroebnerBasis(ring, order, polys, stats)


def is_groebner(G: GroebnerBasis) -> bool:
    """Certificate: every S-polynomial of every pair reduces to zero."""
    key = G.order.key_function()
    lms = G.leading_exponents()
    reducers = G.reducers()
    monic = [_monic(f.terms, lm) for f, lm in zip(G.polys, lms)]
    for i in range(len(monic)):
        for j in range(i + 1, len(monic)):
            sp = _spoly(monic[i], lms[i], monic[j], lms[j])
            if sp and K.normal_form(sp, reducers, key, True):
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    """Monic, no leading term divides another, no tail term lies in the initial ideal."""
    lms = G.leading_exponents()
    for f, lm in zip(G.polys, lms):
        if f.terms[lm] != 1:
            return False
        for e in f.terms:
            for k, other in enumerate(lms):
                if K.divides(other, e) and not (e == lm and other == lm):
                    return False
    return True


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    if not G.order.is_degrevlex:
        raise PreconditionError("initial_ideal needs a degrevlex basis")
    return MonomialIdeal(G.ring, G.leading_exponents())


def eliminate(gens: Sequence[Polynomial], k: int, weights: Sequence[int] | None = None) -> list:
    """Generators of the ideal intersected with the subring on variables k, k+1, ...

    Results are returned in the ring on the remaining variables.
    """
    gens = list(gens)
    ring = gens[0].ring
    G = buchberger(gens, MonomialOrder.elimination(k), weights)
    if k == 0:
        return list(G.polys)
    sub = RingContext(ring.num_vars - k, ring.names[k:])
    out = []
    for f in G.polys:
        if all(not any(e[:k]) for e in f.terms):
            out.append(Polynomial._raw(sub, {e[k:]: c for e, c in f.terms.items()}))
    return out


def saturate_x0(G: GroebnerBasis) -> GroebnerBasis:
    """Basis of I : x_0^∞ from a degrevlex basis of I."""
    if not G.order.is_degrevlex:
        raise PreconditionError("saturate_x0 needs a degrevlex basis")
    divided = [f.divide_by_x0_power(f.x0_power()) for f in G.polys]
    return buchberger(divided, ring=G.ring)


def ideal_sum_hf(G: GroebnerBasis, J: MonomialIdeal, up_to: int = 0) -> HilbertFunction:
    """Hilbert function of R/(I + J)."""
    if G.ring.num_vars != J.nvars:
        raise RingMismatchError("basis and monomial ideal live in different rings")
    gens = list(G.polys) + [Polynomial.monomial(G.ring, e) for e in J.gens]
    if not gens:
        return hilbert_function(MonomialIdeal(G.ring), up_to)
    return hilbert_function(initial_ideal(buchberger(gens, ring=G.ring)), up_to)


# ---------------------------------------------------------------------------
# Generic initial ideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GinResult:
    ideal: MonomialIdeal
    trials_used: int
    changes: tuple
    strongly_stable: bool = True


def gin_report(gens: Sequence[Polynomial], trials: int = 5, seed: int = 0, bound: int = 100) -> GinResult:
    """Generic initial ideal certified by two consecutive agreeing strongly stable trials."""
    if trials < 2:
        raise PreconditionError("gin needs at least two trials")
    gens = list(gens)
    ring = gens[0].ring
    rng = random.Random(seed)
    previous = None
    changes = []
    for trial in range(1, trials + 1):
        g = LinearChange.random(ring.num_vars, rng, bound)
        changes.append(g)
        J = initial_ideal(buchberger([apply_change(f, g) for f in gens], ring=ring))
        if previous is not None and J == previous and is_strongly_stable(J):
            return GinResult(J, trial, tuple(changes))
        previous = J
    raise GenericityError(f"no two consecutive agreeing strongly stable initial ideals in {trials} trials")


def gin(gens: Sequence[Polynomial], trials: int = 5, seed: int = 0, bound: int = 100) -> MonomialIdeal:
    return gin_report(gens, trials, seed, bound).ideal


# ---------------------------------------------------------------------------
# Linear algebra on graded pieces (independent oracles)
# ---------------------------------------------------------------------------


def _slice_rows(gens: Sequence[Polynomial], t: int, cols: dict) -> list:
    rows = []
    ring = gens[0].ring
    for f in gens:
        if not f.is_homogeneous():
            raise PreconditionError("graded slices need homogeneous generators")
        if not f.terms or f.degree > t:
            continue
        for m in ring.terms_of_degree(t - f.degree):
            row = [mpq(0)] * len(cols)
            for e, c in f.terms.items():
                row[cols[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    return rows


def slice_dimension(gens: Sequence[Polynomial], t: int) -> int:
    """dim_K I_t for the ideal generated by homogeneous ``gens``."""
    ring = gens[0].ring
    cols = {e: i for i, e in enumerate(ring.terms_of_degree(t))}
    rows = _slice_rows(gens, t, cols)
    return len(K.rref(rows, len(cols))[1]) if rows else 0


def slice_hilbert_function(gens: Sequence[Polynomial], up_to: int) -> list:
    """Values of the Hilbert function of R/I for t = 0..up_to by rank computations."""
    ring = gens[0].ring
    return [comb(ring.n + t, ring.n) - slice_dimension(gens, t) for t in range(up_to + 1)]


def quotient_slice_dimension(gens: Sequence[Polynomial], t: int, k: int) -> int:
    """dim_K (I : x_0^k)_t = dim {f in R_t : x_0^k f in I_{t+k}}."""
    ring = gens[0].ring
    big = ring.terms_of_degree(t + k)
    cols = {e: i for i, e in enumerate(big)}
    rows = _slice_rows(gens, t + k, cols)
    ideal_rows, pivots = K.rref(rows, len(cols)) if rows else ([], [])
    # R_t maps injectively into R_{t+k} by multiplication with x_0^k; the
    # quotient is the kernel of R_t -> R_{t+k} / I_{t+k}.
    small = ring.terms_of_degree(t)
    images = []
    for e in small:
        row = [mpq(0)] * len(cols)
        row[cols[(e[0] + k,) + e[1:]]] = mpq(1)
        images.append(row)
    rank_i = len(pivots)
    combined = ideal_rows + images
    rank_all = len(K.rref(combined, len(cols))[1]) if combined else 0
    return len(small) - (rank_all - rank_i)
