"""Curve ideals, generic coordinates, the pencil/line construction and the end-to-end check.

Rational curves are given by n+1 binary forms of degree d in (u, v). Their
ideals are computed degree by degree as kernels of the substitution map
R_t -> K[u, v]_{dt}; the Castelnuovo-Mumford regularity bound d - n + 2 for
irreducible nondegenerate curves says which degrees suffice.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import sympy
from gmpy2 import mpq

from . import _kernels as K
from .borel import (
    DGinOrder,
    MonomialIdeal,
    almost_revlex_construct,
    alpha_degree,
    dgin_compare,
    hilbert_function,
    is_almost_revlex,
    is_strongly_stable,
    max_hilbert_function,
    monomial_saturation,
    points_hilbert_function,
    quotient_by_least_variable,
    saturate_borel,
    screen_candidates,
    segment_ideal_construct,
)
from .errors import CertificateError, GenericityError, PreconditionError, RevlexError
from .groebner import GroebnerBasis, MonomialOrder, buchberger, initial_ideal, saturate_x0
from .order import RingContext
from .polyring import (
    LinearChange,
    Polynomial,
    ProjPoint,
    apply_change,
    binary_form_coefficients,
    evaluate,
    gradient_at,
    restrict_to_line,
)

PARAM_RING = RingContext(2, ("u", "v"))


def _max_var_index(texts: Sequence[str]) -> int:
    idx = [int(m) for s in texts for m in re.findall(r"x(\d+)", s)]
    if not idx:
        raise PreconditionError("cannot infer the ambient space from generators without variables")
    return max(idx)


@dataclass(frozen=True)
class CurveSpec:
    """A curve in P^n given either by a parametrization or by ideal generators."""

    n: int
    d: int
    g: int = 0
    param: tuple | None = None
    gens: tuple | None = None

    def __post_init__(self):
        if self.n < 2:
            raise PreconditionError("curves live in P^n with n >= 2")
        if (self.param is None) == (self.gens is None):
            raise PreconditionError("give exactly one of a parametrization or generators")
        if self.param is not None:
            forms = tuple(self.param)
            if len(forms) != self.n + 1:
                raise PreconditionError(f"need {self.n + 1} binary forms, got {len(forms)}")
            for f in forms:
                if f.ring.num_vars != 2:
                    raise PreconditionError("parametrization forms must be binary")
                if f.terms and (not f.is_homogeneous() or f.degree != self.d):
                    raise PreconditionError(f"form {f} is not homogeneous of degree {self.d}")
            if not any(f.terms for f in forms):
                raise PreconditionError("all parametrization forms vanish")
            if _common_factor_degree(forms) > 0:
                raise PreconditionError("parametrization forms share a common factor")
            object.__setattr__(self, "param", forms)
        else:
            gens = tuple(self.gens)
            for f in gens:
                if f.ring.num_vars != self.n + 1:
                    raise PreconditionError("generators must live in P^n")
                if not f.is_homogeneous():
                    raise PreconditionError(f"generator {f} is not homogeneous")
            object.__setattr__(self, "gens", gens)

    @property
    def ring(self) -> RingContext:
        return RingContext.standard(self.n + 1)

    @property
    def is_parametrized(self) -> bool:
        return self.param is not None

    @classmethod
    def from_forms(cls, texts: Sequence[str], g: int = 0) -> "CurveSpec":
        forms = [Polynomial.parse(PARAM_RING, s) for s in texts]
        degs = {f.degree for f in forms if f.terms}
        if len(degs) != 1:
            raise PreconditionError("parametrization forms must share one degree")
        return cls(len(forms) - 1, degs.pop(), g, param=tuple(forms))

    def point_at(self, u0, v0) -> ProjPoint:
        """Image of the parameter point (u0 : v0)."""
        if not self.is_parametrized:
            raise PreconditionError("points on the curve need a parametrization")
        return ProjPoint(tuple(evaluate(f, (u0, v0)) if f.terms else mpq(0) for f in self.param))

    def transformed(self, M: LinearChange) -> "CurveSpec":
        """The same curve after the coordinate change x -> M x of P^n."""
        if self.is_parametrized:
            forms = []
            for row in M.matrix:
                acc = Polynomial(PARAM_RING)
                for c, f in zip(row, self.param):
                    if c:
                        acc = acc + f * c
                forms.append(acc)
            return CurveSpec(self.n, self.d, self.g, param=tuple(forms))
        # f(M^{-1} x) vanishes on M(C)
        inv = M.inverse()
        return CurveSpec(self.n, self.d, self.g, gens=tuple(apply_change(f, inv) for f in self.gens))

    def to_json(self) -> dict:
        out = {"n": self.n, "d": self.d, "g": self.g}
        if self.is_parametrized:
            out["param"] = [str(f) for f in self.param]
        else:
            out["gens"] = [str(f) for f in self.gens]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "CurveSpec":
        g = int(obj.get("g", 0))
        if "param" in obj:
            curve = cls.from_forms(obj["param"], g)
            if "n" in obj and int(obj["n"]) != curve.n:
                raise PreconditionError("n does not match the number of forms")
            if "d" in obj and int(obj["d"]) != curve.d:
                raise PreconditionError("d does not match the degree of the forms")
            return curve
        if "gens" not in obj:
            raise PreconditionError("curve JSON needs 'param' or 'gens'")
        n = int(obj["n"]) if "n" in obj else _max_var_index(obj["gens"])
        ring = RingContext.standard(n + 1)
        gens = tuple(Polynomial.parse(ring, s) for s in obj["gens"])
        d = int(obj["d"]) if "d" in obj else 0
        if not d:
            poly = hilbert_function(initial_ideal(buchberger(gens))).poly
            d = int(poly[1]) if len(poly) > 1 else 0
        return cls(n, d, g, gens=gens)


def _to_sympy(f: Polynomial, u, v):
    return sympy.Add(*[sympy.Rational(int(c.numerator), int(c.denominator)) * u ** e[0] * v ** e[1] for e, c in f.terms.items()])


def _common_factor_degree(forms: Sequence[Polynomial]) -> int:
    u, v = sympy.symbols("u v")
    g = sympy.Integer(0)
    for f in forms:
        if f.terms:
            g = sympy.gcd(g, _to_sympy(f, u, v))
    return int(sympy.Poly(g, u, v).total_degree())


def rational_normal_curve(n: int) -> CurveSpec:
    """(u^n, u^(n-1) v, ..., v^n) in P^n."""
    if n < 2:
        raise PreconditionError("rational normal curves need n >= 2")
    forms = tuple(Polynomial.monomial(PARAM_RING, (n - i, i)) for i in range(n + 1))
    return CurveSpec(n, n, 0, param=forms)


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


# ---------------------------------------------------------------------------
# Graded pieces of the ideal of a parametrized curve
# ---------------------------------------------------------------------------


def _conv(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


class _SliceImages:
    """Images of the degree-t terms under x_i -> f_i(u, v), as coefficient lists."""

    def __init__(self, curve: CurveSpec):
        self.ring = curve.ring
        self.forms = [binary_form_coefficients(f, curve.d) if f.terms else [mpq(0)] * (curve.d + 1) for f in curve.param]
        self.layers = {0: {(0,) * self.ring.num_vars: [mpq(1)]}}

    def layer(self, t):
        if t not in self.layers:
            prev = self.layer(t - 1)
            cur = {}
            for e in self.ring.terms_of_degree(t):
                i = K.min_var(e)
                cur[e] = _conv(prev[e[:i] + (e[i] - 1,) + e[i + 1:]], self.forms[i])
            self.layers[t] = cur
        return self.layers[t]

    def kernel(self, t):
        """Reduced echelon basis of I_t keyed by leading exponent, and the rank of R_t -> K[u,v]_{dt}."""
        images = self.layer(t)
        cols = list(reversed(self.ring.terms_of_degree(t)))  # ascending
        width = len(next(iter(images.values())))
        rows = [[images[e][r] for e in cols] for r in range(width)]
        reduced, pivots = K.rref(rows, len(cols))
        pivset = set(pivots)
        out = {}
        for j, e in enumerate(cols):
            if j in pivset:
                continue
            vec = {e: mpq(1)}
            for r, p in enumerate(pivots):
                if p < j and reduced[r][j]:
                    vec[cols[p]] = -reduced[r][j]
            out[e] = vec
        return out, len(pivots)


def span_dimension(curve: CurveSpec) -> int:
    """Dimension of the linear span of the parametrization forms."""
    forms = [binary_form_coefficients(f, curve.d) if f.terms else [0] * (curve.d + 1) for f in curve.param]
    return len(K.rref(forms, curve.d + 1)[1])


def regularity_bound(curve: CurveSpec) -> int:
    """Degree bound d - n' + 2 for generators of the ideal, n' the dimension of the linear span."""
    n_eff = span_dimension(curve) - 1
    return max(2, curve.d - n_eff + 2)


def parametrized_hilbert_values(curve: CurveSpec, up_to: int) -> list:
    """Ranks of R_t -> K[u,v]_{dt}, i.e. the Hilbert function of the curve, for t <= up_to."""
    images = _SliceImages(curve)
    return [images.kernel(t)[1] for t in range(up_to + 1)]


def _kernel_basis(curve: CurveSpec) -> GroebnerBasis:
    """Basis of I(C) from kernels of R_t -> K[u,v]_{dt}.

    The echelon basis of I_t has one vector per term of in(I)_t, with a tail
    of standard terms only. Once the map is onto in degree t it stays onto in
    every higher degree (two general forms of the span are coprime), so if
    the leading terms found through degree t generate a monomial ideal with
    the Hilbert function of the curve, they generate in(I) and the matching
    vectors already form the reduced Gröbner basis. Otherwise generators are
    collected up to the regularity bound and completed by Buchberger.
    """
    ring = curve.ring
    images = _SliceImages(curve)
    top = regularity_bound(curve)
    gens = {}
    lts = MonomialIdeal(ring)
    ranks = [1]
    for t in range(1, top + 1):
        vecs, rank = images.kernel(t)
        ranks.append(rank)
        fresh = [e for e in vecs if not lts.contains(e)]
        for e in fresh:
            gens[e] = vecs[e]
        if fresh:
            lts = MonomialIdeal(ring, list(lts.gens) + fresh)
        if gens and rank == curve.d * t + 1:
            hf = hilbert_function(lts, t)
            if list(hf.values[: t + 1]) == ranks and hf.poly == (1, curve.d) and hf.stab <= t:
                order = sorted(gens, key=K.desc_key, reverse=True)
                polys = tuple(Polynomial._raw(ring, gens[e]) for e in order)
                return GroebnerBasis(ring, MonomialOrder.degrevlex(), polys)
    return buchberger([Polynomial._raw(ring, v) for v in gens.values()], ring=ring)


def _elimination_generators(curve: CurveSpec) -> list:
    names = ("u", "v") + curve.ring.names
    big = RingContext(len(names), names)
    gens = []
    for i, f in enumerate(curve.param):
        e = [0] * big.num_vars
        e[2 + i] = 1
        terms = {tuple(e): mpq(1)}
        for (a, b), c in f.terms.items():
            terms[(a, b) + (0,) * (curve.n + 1)] = -c
        gens.append(Polynomial(big, terms))
    weights = (1, 1) + (curve.d,) * (curve.n + 1)
    G = buchberger(gens, MonomialOrder.elimination(2), weights)
    out = []
    for f in G.polys:
        if all(e[0] == 0 and e[1] == 0 for e in f.terms):
            out.append(Polynomial._raw(curve.ring, {e[2:]: c for e, c in f.terms.items()}))
    return out


def curve_ideal(C: CurveSpec, method: str = "kernel") -> GroebnerBasis:
    """Reduced degrevlex Gröbner basis of the ideal of C.

    For a parametrization ``method`` selects how generators are found:
    ``"kernel"`` (graded linear algebra up to the regularity bound) or
    ``"elimination"`` (block elimination of u, v from x_i - f_i(u, v)).
    """
    if not C.is_parametrized:
        return buchberger(C.gens, ring=C.ring)
    if method == "kernel":
        return _kernel_basis(C)
    if method == "elimination":
        return buchberger(_elimination_generators(C), ring=C.ring)
    raise PreconditionError(f"unknown implicitization method {method!r}")


def random_rational_curve(n: int, d: int, seed=0, bound: int = 100, budget: int = 20) -> CurveSpec:
    """Random forms of degree d with coefficients in [-bound, bound], certified of maximal rank."""
    if d < n:
        raise PreconditionError(f"a nondegenerate rational curve in P^{n} needs d >= n, got d={d}")
    rng = _rng(seed)
    H = max_hilbert_function(n, d, 0)
    for _ in range(budget):
        forms = []
        for _ in range(n + 1):
            coeffs = {(d - k, k): rng.randint(-bound, bound) for k in range(d + 1)}
            forms.append(Polynomial(PARAM_RING, coeffs))
        if any(not f.terms or f.degree != d for f in forms):
            continue
        try:
            curve = CurveSpec(n, d, 0, param=tuple(forms))
        except PreconditionError:
            continue
        if parametrized_hilbert_values(curve, H.stab + 1) == H.upto(H.stab + 1):
            return curve
    raise GenericityError(f"no maximal-rank rational curve of degree {d} in P^{n} after {budget} samples")


# ---------------------------------------------------------------------------
# Generic coordinates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveGin:
    """Certified generic initial ideal together with the curve and basis realizing it."""

    ideal: MonomialIdeal
    basis: GroebnerBasis
    curve: CurveSpec
    trials_used: int


def curve_gin(C: CurveSpec, trials: int = 5, seed=0, bound: int = 100, method: str = "kernel") -> CurveGin:
    """gin(I(C)) by random coordinate changes of the curve itself.

    Accepted once two consecutive trials give the same strongly stable
    initial ideal; the last trial's curve and basis are returned.
    """
    if trials < 2:
        raise PreconditionError("gin needs at least two trials")
    rng = _rng(seed)
    previous = None
    for trial in range(1, trials + 1):
        M = LinearChange.random(C.n + 1, rng, bound)
        moved = C.transformed(M)
        G = curve_ideal(moved, method)
        J = initial_ideal(G)
        if previous is not None and J == previous and is_strongly_stable(J):
            return CurveGin(J, G, moved, trial)
        previous = J
    raise GenericityError(f"no two consecutive agreeing strongly stable initial ideals in {trials} trials")


def hyperplane_section_in(G: GroebnerBasis) -> MonomialIdeal:
    """Saturated initial ideal of the section by x_0 = 0, in the ring on x_1..x_n."""
    J = initial_ideal(G)
    Z = quotient_by_least_variable(J)
    if is_strongly_stable(Z):
        return saturate_borel(Z)
    return monomial_saturation(Z)


# ---------------------------------------------------------------------------
# Pencil of quadrics and a line through a point of the curve
# ---------------------------------------------------------------------------


def line_ideal(P: ProjPoint, Q: ProjPoint, ring: RingContext) -> list:
    """Linear forms vanishing on the line through P and Q."""
    reduced, pivots = K.rref([list(P.coords), list(Q.coords)], ring.num_vars)
    forms = []
    for j in range(ring.num_vars):
        if j in pivots:
            continue
        vec = {tuple(1 if k == j else 0 for k in range(ring.num_vars)): mpq(1)}
        for r, p in enumerate(pivots):
            if reduced[r][j]:
                vec[tuple(1 if k == p else 0 for k in range(ring.num_vars))] = -reduced[r][j]
        forms.append(Polynomial(ring, vec))
    return forms


def _rank(rows, ncols) -> int:
    return len(K.rref(rows, ncols)[1]) if rows else 0


@dataclass(frozen=True)
class PencilSelection:
    g1: Polynomial
    g2: Polynomial
    tau1: tuple
    tau2: tuple
    P: ProjPoint
    Q: ProjPoint
    Q1: ProjPoint
    Q2: ProjPoint
    certificates: dict
    low_terms_count: int
    resamples: int = 0

    def to_json(self) -> dict:
        ring = self.g1.ring
        return {
            "g1": str(self.g1),
            "g2": str(self.g2),
            "tau1": ring.format_term(self.tau1),
            "tau2": ring.format_term(self.tau2),
            "P": [str(c) for c in self.P.coords],
            "Q": [str(c) for c in self.Q.coords],
            "Q1": [str(c) for c in self.Q1.coords],
            "Q2": [str(c) for c in self.Q2.coords],
            "certificates": dict(self.certificates),
            "low_terms_count": self.low_terms_count,
            "resamples": self.resamples,
        }


def _line_certificates(G: GroebnerBasis, g1, g2, P: ProjPoint, Q: ProjPoint) -> dict:
    ring = G.ring
    # (a) the line lies on no quadric of the pencil
    r1 = binary_form_coefficients(restrict_to_line(g1, P, Q), 2)
    r2 = binary_form_coefficients(restrict_to_line(g2, P, Q), 2)
    not_on_pencil = _rank([r1, r2], 3) == 2
    # (b) C and L meet in a scheme of length one, the reduced point P
    lines = line_ideal(P, Q, ring)
    S = buchberger(list(G.polys) + lines, ring=ring)
    hf = hilbert_function(initial_ideal(S))
    single_point = tuple(hf.poly) == (1,)
    if single_point and P.coords[0]:
        sat = saturate_x0(S)
        linear = [f for f in sat.polys if f.degree == 1]
        single_point = len(linear) == ring.n
    elif single_point:
        single_point = False
    # (c) Jacobian of I(C) + I(L) at P has rank n
    jac = [list(gradient_at(f, P)) for f in list(G.polys) + lines]
    transversal = _rank(jac, ring.num_vars) == ring.n
    return {
        "line_not_on_pencil": not_on_pencil,
        "meets_curve_only_at_P": single_point,
        "transversal": transversal,
    }


def _pick_on_line(P: ProjPoint, Q: ProjPoint, ok, start: int = 1, limit: int = 64):
    for lam in range(start, start + limit):
        R = P.combine(1, Q, lam)
        if ok(R):
            return R, lam
    raise CertificateError("no point of the line satisfies the pivot condition")


def select_pencil_and_line(
    G: GroebnerBasis,
    seed=0,
    curve: CurveSpec | None = None,
    point: ProjPoint | None = None,
    bound: int = 100,
    budget: int = 20,
) -> PencilSelection:
    """Two lowest quadrics of the basis, a point P of the curve and a certified line through P."""
    rng = _rng(seed)
    ring = G.ring
    J = initial_ideal(G)
    quad = J.gens_of_degree(2)
    if len(quad) < 2:
        raise PreconditionError("the curve does not lie on two independent quadrics")
    tau1, tau2 = quad[-1], quad[-2]
    by_lm = dict(zip(G.leading_exponents(), G.polys))
    g1, g2 = by_lm[tau1], by_lm[tau2]
    poly = hilbert_function(J).poly
    deg = int(poly[1]) if len(poly) > 1 else 0
    lowest = list(reversed(ring.terms_of_degree(2)))[: 2 * (deg + 1) + 1]
    low_count = sum(1 for e in lowest if J.contains(e))
    if point is None and (curve is None or not curve.is_parametrized):
        raise PreconditionError("choosing a point on the curve needs a parametrization or an explicit point")

    resamples = 0
    for _ in range(budget):
        if point is not None:
            P = point
        else:
            u0, v0 = rng.randint(-bound, bound), rng.randint(-bound, bound)
            if u0 == 0 and v0 == 0:
                continue
            P = curve.point_at(u0, v0)
        if any(evaluate(f, P) for f in G.polys):
            raise PreconditionError("the chosen point is not on the curve")
        smooth = any(gradient_at(g1, P)) or any(gradient_at(g2, P))
        if not smooth:
            resamples += 1
            if point is not None:
                raise CertificateError("every quadric of the pencil is singular at the given point")
            continue
        for _ in range(budget):
            coords = tuple(rng.randint(-bound, bound) for _ in range(ring.num_vars))
            if not any(coords) or P.proportional_to(ProjPoint(coords)):
                resamples += 1
                continue
            Q = ProjPoint(coords)
            certs = _line_certificates(G, g1, g2, P, Q)
            if not all(certs.values()):
                resamples += 1
                continue
            Q1, lam = _pick_on_line(P, Q, lambda R: evaluate(g1, R) != 0)
            g1_1 = g1 * (1 / evaluate(g1, Q1))
            g2_1 = g2 - g1_1 * evaluate(g2, Q1)
            Q2, _ = _pick_on_line(P, Q, lambda R: evaluate(g2_1, R) != 0, start=lam + 1)
            return PencilSelection(g1, g2, tau1, tau2, P, Q, Q1, Q2, certs, low_count, resamples)
    raise CertificateError(f"no certified line found after {resamples} resamples")


@dataclass(frozen=True)
class AttachedLine:
    polys: tuple
    leading_terms: tuple

    def to_json(self, ring: RingContext) -> dict:
        return {
            "polys": [str(f) for f in self.polys],
            "leading_terms": [ring.format_term(e) for e in self.leading_terms],
        }


def attach_line(G: GroebnerBasis, S: PencilSelection) -> AttachedLine:
    """Degree-2 forms vanishing on C and L by the triangular elimination through Q_1, Q_2."""
    if not all(S.certificates.values()):
        raise PreconditionError("the pencil selection is not certified")
    a = evaluate(S.g1, S.Q1)
    if not a:
        raise CertificateError("g_1 vanishes at Q_1")
    g1_1 = S.g1 * (1 / a)
    g2_1 = S.g2 - g1_1 * evaluate(S.g2, S.Q1)
    b = evaluate(g2_1, S.Q2)
    if not b:
        raise CertificateError("the second pencil element vanishes at Q_2")
    g2_2 = g2_1 * (1 / b)
    skip = {S.tau1, S.tau2}
    others = [(f, lm) for f, lm in zip(G.polys, G.leading_exponents()) if sum(lm) == 2 and lm not in skip]
    out, lts = [], []
    for gi, lm in others:
        gi_1 = gi - g1_1 * evaluate(gi, S.Q1)
        gi_2 = gi_1 - g2_2 * evaluate(gi_1, S.Q2)
        if evaluate(gi_2, S.Q1) or evaluate(gi_2, S.Q2):
            raise CertificateError("interpolated form does not vanish at Q_1, Q_2")
        if not restrict_to_line(gi_2, S.P, S.Q).is_zero():
            raise CertificateError("interpolated form does not vanish on the line")
        if gi_2.lm() != lm:
            raise CertificateError("interpolation changed a leading term")
        out.append(gi_2)
        lts.append(gi_2.lm())
    return AttachedLine(tuple(out), tuple(lts))


# ---------------------------------------------------------------------------
# End-to-end verification
# ---------------------------------------------------------------------------


def in_interpolation_range(n: int, d: int, g: int) -> bool:
    if g == 0:
        return n <= d and 4 * d < n * n + 3 * n
    if g == 1:
        return n < d and 4 * d < n * n + 3 * n + 2
    return False


@dataclass
class TheoremReport:
    n: int
    d: int
    g: int
    seed: int
    equal: bool = False
    gin: MonomialIdeal | None = None
    almost_revlex: MonomialIdeal | None = None
    stages: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "g": self.g,
            "seed": self.seed,
            "equal": self.equal,
            "gin": self.gin.gen_strings() if self.gin is not None else None,
            "almost_revlex": self.almost_revlex.gen_strings() if self.almost_revlex is not None else None,
            "stages": self.stages,
        }


class _Stage:
    """Relabels errors raised inside a pipeline stage."""

    def __init__(self, name):
        self.name = name

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc is not None and isinstance(exc, RevlexError) and not str(exc).startswith("stage "):
            raise exc.__class__(f"stage {self.name}: {exc}") from exc
        return False


def verify_theorem(
    n: int,
    d: int,
    g: int = 0,
    seed: int = 0,
    curve: CurveSpec | None = None,
    bound: int = 100,
    trials: int = 5,
    screen: bool = True,
    line: bool = True,
) -> TheoremReport:
    """Sample or take a curve, compute its gin and compare it with the almost revlex ideal."""
    if not in_interpolation_range(n, d, g):
        raise PreconditionError(f"(n, d, g) = ({n}, {d}, {g}) is outside the interpolation range")
    if curve is None and g != 0:
        raise PreconditionError("curves of positive genus must be supplied as ideals")
    rng = random.Random(seed)
    report = TheoremReport(n, d, g, seed)
    H = max_hilbert_function(n, d, g)

    with _Stage("sample"):
        if curve is None:
            curve = random_rational_curve(n, d, rng, bound)
        report.stages["sample"] = {"curve": curve.to_json()}

    with _Stage("gin"):
        if curve.is_parametrized:
            cg = curve_gin(curve, trials, rng, bound)
            gin_ideal, basis, trials_used = cg.ideal, cg.basis, cg.trials_used
        else:
            from .groebner import gin_report

            res = gin_report(curve.gens, trials, rng.getrandbits(63), bound)
            gin_ideal, trials_used = res.ideal, res.trials_used
            basis = buchberger([apply_change(f, res.changes[-1]) for f in curve.gens], ring=curve.ring)
        hf = hilbert_function(gin_ideal)
        maximal = hf.agrees(H)
        report.stages["gin"] = {
            "trials_used": trials_used,
            "strongly_stable": True,
            "maximal_hilbert_function": maximal,
            "basis_size": len(basis),
        }
        if not maximal:
            raise CertificateError("the curve does not have the maximal Hilbert function")
    report.gin = gin_ideal

    with _Stage("construct"):
        AR = almost_revlex_construct(H, curve.ring)
        report.almost_revlex = AR
        report.equal = AR == gin_ideal
        report.stages["construct"] = {"is_almost_revlex": is_almost_revlex(AR), "equal": report.equal}

    with _Stage("section"):
        section = hyperplane_section_in(basis)
        target = segment_ideal_construct(points_hilbert_function(n, d), section.ring)
        report.stages["section"] = {"in_section": section.gen_strings(), "segment": section == target}

    with _Stage("dgin"):
        report.stages["dgin"] = {"almost_revlex_vs_gin": dgin_compare(AR, gin_ideal).value}

    alpha = alpha_degree(n, d, g)
    report.stages["shortcut"] = {
        "alpha": alpha,
        "applies": comb(n + alpha, alpha) - (d * alpha + 1 - g) <= 2,
    }

    if screen:
        with _Stage("screen"):
            cands = screen_candidates(n, d, g)
            ranks = [dgin_compare(AR, J) for J in cands]
            report.stages["screen"] = {
                "candidates": len(cands),
                "gin_among_candidates": gin_ideal in cands,
                "almost_revlex_is_maximum": all(r in (DGinOrder.GREATER, DGinOrder.EQUAL) for r in ranks),
            }

    if line:
        with _Stage("interpolation"):
            report.stages["interpolation"] = _interpolation_stage(n, d, g, rng, bound, trials, AR)
    return report


def _interpolation_stage(n, d, g, rng, bound, trials, AR) -> dict:
    if g != 0:
        return {"skipped": "needs a sampled curve of degree d - 1"}
    if d == n:
        return {"skipped": "minimal degree"}
    smaller = random_rational_curve(n, d - 1, rng, bound)
    cg = curve_gin(smaller, trials, rng, bound)
    S = select_pencil_and_line(cg.basis, rng, curve=cg.curve, bound=bound)
    A = attach_line(cg.basis, S)
    target = set(AR.gens_of_degree(2))
    return {
        "tau": [cg.basis.ring.format_term(S.tau1), cg.basis.ring.format_term(S.tau2)],
        "certificates": S.certificates,
        "low_terms_count": S.low_terms_count,
        "leading_terms_match": set(A.leading_terms) == target,
    }


def grid_cells(nmax: int, nmin: int = 3) -> list:
    """(n, d) pairs of the rational interpolation range with nmin <= n <= nmax."""
    return [(n, d) for n in range(nmin, nmax + 1) for d in range(n, (n * n + 3 * n + 3) // 4 + 1) if in_interpolation_range(n, d, 0)]


def verify_grid(nmax: int, seeds: Sequence[int] = (0,), **kwargs) -> list:
    return [verify_theorem(n, d, 0, s, **kwargs) for n, d in grid_cells(nmax) for s in seeds]
