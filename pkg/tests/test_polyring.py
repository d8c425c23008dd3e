import random

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from revlexgin.errors import PreconditionError, RingMismatchError
from revlexgin.order import RingContext, Term
from revlexgin.polyring import (
    LINE_RING,
    LinearChange,
    Polynomial,
    ProjPoint,
    apply_change,
    evaluate,
    restrict_to_line,
)

R3 = RingContext.standard(3)
R4 = RingContext.standard(4)


def P(ring, text):
    return Polynomial.parse(ring, text)


def test_leading_term_examples():
    t, c = P(R3, "x1^2 - x0*x2").leading_term()
    assert t == Term((0, 2, 0)) and c == 1
    t, c = Polynomial.constant(R3, 5).leading_term()
    assert t == Term.one(3) and c == 5
    t, _ = P(R3, "x0^3 + x0^2*x1").leading_term()
    assert t == Term((2, 1, 0))
    with pytest.raises(PreconditionError):
        Polynomial(R3, {}).leading_term()


def test_evaluate_examples():
    assert evaluate(P(R3, "x0*x1"), ProjPoint((1, 0, 0))) == 0
    assert evaluate(P(R3, "x0^2 - x1*x2"), ProjPoint((1, 1, 1))) == 0
    assert evaluate(P(R3, "x0^2 + x1^2"), ProjPoint((1, 2, 0))) == 5


def test_evaluate_flags_mixed_degrees():
    with pytest.warns(UserWarning):
        evaluate(P(R3, "x0^2 + x1"), (1, 1, 1))
    with pytest.raises(RingMismatchError):
        evaluate(P(R3, "x0"), (1, 1))


def test_apply_change_examples():
    f = P(R3, "x0^2*x1 - 3/2*x2^3")
    assert apply_change(f, LinearChange.identity(3)) == f
    swap = LinearChange([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert apply_change(P(R3, "x0^2"), swap) == P(R3, "x1^2")
    shear = LinearChange([[1, 0, 0], [1, 1, 0], [0, 0, 1]])
    assert apply_change(P(R3, "x1^2"), shear) == P(R3, "x1^2 + 2*x0*x1 + x0^2")
    with pytest.raises(PreconditionError):
        LinearChange([[1, 2], [2, 4]])


def test_restrict_to_line_examples():
    got = restrict_to_line(P(R3, "x0"), ProjPoint((0, 1, 0)), ProjPoint((1, 0, 0)))
    assert got == Polynomial.var(LINE_RING, 1)
    # x2 and x3 both vanish at the two points, so their product vanishes on the line
    p, q = ProjPoint((1, 0, 0, 0)), ProjPoint((0, 1, 0, 0))
    assert restrict_to_line(P(R4, "x2*x3 + x2^2"), p, q).is_zero
    quad = P(R4, "x0*x3 - x1*x2")
    st_form = restrict_to_line(quad, ProjPoint((1, 0, 0, 0)), ProjPoint((0, 0, 0, 1)))
    assert st_form == Polynomial.monomial(LINE_RING, (1, 1))
    with pytest.raises(PreconditionError):
        restrict_to_line(quad, ProjPoint((1, 2, 3, 4)), ProjPoint((2, 4, 6, 8)))


def test_text_round_trip_examples():
    f = P(R3, "x0^2*x1 - 3/2*x2^3")
    # printing lists terms from the largest down
    assert str(f) == "-3/2*x2^3 + x0^2*x1"
    assert P(R3, str(f)) == f
    assert P(R3, "0").is_zero
    with pytest.raises(PreconditionError):
        P(R3, "x0 + y")


def test_projective_point_needs_a_nonzero_coordinate():
    with pytest.raises(PreconditionError):
        ProjPoint((0, 0, 0))
    assert ProjPoint((2, 4)).proportional_to(ProjPoint((1, 2)))


# --- properties -------------------------------------------------------------

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, ring=R3, max_deg=3, homogeneous=None):
    deg = draw(st.integers(0, max_deg)) if homogeneous is None else homogeneous
    terms = {}
    pool = [e for t in ([deg] if homogeneous is not None else range(max_deg + 1)) for e in ring.terms_of_degree(t)]
    for e in draw(st.lists(st.sampled_from(pool), max_size=6)):
        c = draw(coeffs)
        if c:
            terms[e] = mpq(c.numerator, c.denominator)
    return Polynomial(ring, terms)


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert (f - f).is_zero


@given(polys(homogeneous=2), polys(homogeneous=3))
def test_degrees_add_and_leading_terms_multiply(f, g):
    if f.is_zero or g.is_zero:
        return
    fg = f * g
    assert fg.is_homogeneous() and fg.degree == 5
    (a, ca), (b, cb), (ab, cab) = f.leading_term(), g.leading_term(), fg.leading_term()
    assert ab == a * b and cab == ca * cb


@given(polys(ring=R4, max_deg=3), st.integers(0, 10**6))
def test_change_then_inverse_is_identity(f, seed):
    g = LinearChange.random(4, random.Random(seed), bound=5)
    assert apply_change(apply_change(f, g), g.inverse()) == f


@given(polys(), polys(ring=R3, max_deg=2))
def test_parse_print_round_trip(f, _):
    assert P(R3, str(f)) == f


@given(polys(ring=R4, max_deg=3), st.integers(0, 3))
def test_x0_divisibility_matches_leading_term(f, k):
    if f.is_zero:
        return
    g = f * Polynomial.monomial(R4, (k, 0, 0, 0))
    for j in range(k + 3):
        whole = g.x0_power() >= j
        lead = g.leading_term()[0].exponents[0] >= j
        assert whole == lead


@given(st.integers(1, 3), st.data())
def test_restriction_is_zero_iff_vanishing_on_enough_points(deg, data):
    point = st.lists(st.integers(-3, 3), min_size=4, max_size=4).filter(any)
    p, q = ProjPoint(data.draw(point)), ProjPoint(data.draw(point))
    if p.proportional_to(q):
        return
    f = data.draw(polys(ring=R4, homogeneous=deg))
    if data.draw(st.booleans()):
        # multiply by a linear form through p and q so that f vanishes on the line
        kernel = sympy.Matrix([[int(c) for c in p.coords], [int(c) for c in q.coords]]).nullspace()[0]
        line_form = Polynomial(R4, {tuple(int(i == j) for j in range(4)): mpq(str(c)) for i, c in enumerate(kernel)})
        f = f * line_form
    if f.is_zero:
        return
    values = [evaluate(f, p.combine(1, q, s)) for s in range(f.degree + 1)]
    assert restrict_to_line(f, p, q).is_zero == all(v == 0 for v in values)
