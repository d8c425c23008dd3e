import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from revlexgin.borel import (
    DGinOrder,
    HilbertFunction,
    MonomialIdeal,
    acm_gin,
    acm_listed_generators,
    acm_lines,
    almost_revlex_construct,
    alpha_degree,
    brute_force_strongly_stable,
    dgin_compare,
    enumerate_strongly_stable,
    gotzmann_number,
    hilbert_function,
    is_almost_revlex,
    is_segment_ideal,
    is_strongly_stable,
    max_hilbert_function,
    points_hilbert_function,
    quotient_by_least_variable,
    rao_dimensions,
    saturate_borel,
    screen_candidates,
    segment_ideal_construct,
)
from revlexgin.errors import EnumerationLimitError, PreconditionError
from revlexgin.order import RingContext, Term, expand

R6 = RingContext.standard(6)
R15 = RingContext.standard(5, first=1)

SECTION_GENS = ["x2^3", "x2^2*x3", "x2^2*x4", "x2*x5", "x3^2", "x3*x4", "x3*x5", "x4^2", "x4*x5", "x5^2"]
CANDIDATE_GENS = [
    "x2*x5", "x3*x5", "x4*x5", "x5^2", "x1*x3^2", "x1*x3*x4", "x1*x4^2", "x2*x3^2", "x2*x3*x4",
    "x2*x4^2", "x3^3", "x3^2*x4", "x3*x4^2", "x4^3", "x2^3", "x2^2*x3", "x2^2*x4",
]
QUARTIC_GENS = ["x2^2", "x2*x3", "x3^2", "x0*x1", "x1*x2", "x1*x3"]


def ideal(ring, texts):
    return MonomialIdeal.parse(ring, texts)


def section_ideal():
    return ideal(R15, SECTION_GENS)


def candidate_ideal():
    return ideal(R6, CANDIDATE_GENS)


def zero(ring):
    return MonomialIdeal(ring, [])


# --- predicates -------------------------------------------------------------


def test_strongly_stable_examples():
    R3 = RingContext.standard(3)
    assert is_strongly_stable(ideal(R3, ["x2"]))
    assert not is_strongly_stable(ideal(RingContext.standard(5), QUARTIC_GENS))
    assert is_strongly_stable(section_ideal())


def test_segment_examples():
    assert is_segment_ideal(zero(R6), 3)
    assert is_segment_ideal(section_ideal(), 3)
    assert not is_segment_ideal(candidate_ideal(), 3)


def test_almost_revlex_examples():
    assert not is_almost_revlex(ideal(RingContext.standard(5), QUARTIC_GENS))
    assert is_almost_revlex(zero(R6))


def test_generators_are_kept_minimal():
    J = ideal(RingContext.standard(3), ["x2", "x2^2", "x1*x2"])
    assert J.gen_strings() == ["x2"]
    assert J.contains(Term((3, 0, 1)))
    assert not J.contains(Term((3, 1, 0)))


# --- constructions ----------------------------------------------------------


def test_almost_revlex_construct_examples():
    H = HilbertFunction.from_values([1, 5, 8], (8,))
    assert set(almost_revlex_construct(H, R15).gen_strings()) == set(SECTION_GENS)
    R4 = RingContext.standard(4)
    full = hilbert_function(zero(R4), 4)
    assert almost_revlex_construct(full, R4).is_zero
    H = max_hilbert_function(3, 4, 0)
    assert H.upto(3) == [1, 4, 9, 13]
    J = almost_revlex_construct(H, R4)
    assert set(J.gen_strings()) == {"x3^2", "x2^2*x3", "x2^3", "x1*x2*x3"}
    assert is_almost_revlex(J) and hilbert_function(J).agrees(H)


def test_segment_construct_examples():
    assert set(segment_ideal_construct(points_hilbert_function(5, 8), R15).gen_strings()) == set(SECTION_GENS)
    R3 = RingContext.standard(3)
    assert segment_ideal_construct(hilbert_function(zero(R3), 3), R3, 3).is_zero
    got = segment_ideal_construct(points_hilbert_function(3, 3), R3)
    assert set(got.gen_strings()) == {"x2^2", "x1*x2", "x1^2"}


def test_segment_construct_rejects_non_ideal():
    # the top two quadrics force x0*x1*x2, which is not among the top five cubics
    R3 = RingContext.standard(3)
    H = HilbertFunction.from_values([1, 3, 4, 5], (2, 1))
    with pytest.raises(PreconditionError):
        segment_ideal_construct(H, R3, 3)


def test_saturation_examples():
    J = candidate_ideal()
    assert saturate_borel(J) == J
    R2 = RingContext.standard(2)
    assert saturate_borel(ideal(R2, ["x1^2", "x0*x1"])).gen_strings() == ["x1"]
    with pytest.raises(PreconditionError):
        saturate_borel(ideal(RingContext.standard(5), QUARTIC_GENS))


def test_quotient_examples():
    J = candidate_ideal()
    assert saturate_borel(quotient_by_least_variable(J)) == section_ideal()
    assert quotient_by_least_variable(zero(R6)).is_zero
    # three-variable analogue of (x0*x1, x1^2): the image (x1*x2, x2^2) saturates to (x2)
    R3 = RingContext.standard(3)
    image = quotient_by_least_variable(ideal(R3, ["x0*x2", "x1*x2", "x2^2"]))
    assert set(image.gen_strings()) == {"x1*x2", "x2^2"}
    assert saturate_borel(image).gen_strings() == ["x2"]
    with pytest.raises(PreconditionError):
        quotient_by_least_variable(ideal(RingContext.standard(2), ["x0*x1", "x1^2"]))


# --- Hilbert functions ------------------------------------------------------


def test_hilbert_function_examples():
    H = hilbert_function(zero(RingContext.standard(2)), 5)
    assert H.upto(5) == [1, 2, 3, 4, 5, 6]
    assert list(H.poly) == [1, 1]
    AR = almost_revlex_construct(max_hilbert_function(5, 8, 0), R6)
    H = hilbert_function(AR + MonomialIdeal.power_of_maximal(R6, 4), 6)
    assert H.upto(6) == [1, 6, 17, 25, 0, 0, 0]
    H = hilbert_function(section_ideal(), 5)
    assert H.upto(5) == [1, 5, 8, 8, 8, 8] and list(H.poly) == [8]


def test_hilbert_json_round_trip():
    H = max_hilbert_function(5, 8, 0)
    assert HilbertFunction.from_json(H.to_json()) == H
    J = candidate_ideal()
    assert MonomialIdeal.from_json(J.to_json()) == J
    assert J.to_json()["vars"] == 6


def test_alpha_examples():
    assert alpha_degree(4, 5, 0) == 2
    assert alpha_degree(3, 9, 0) == 5
    assert alpha_degree(5, 8, 0) == 2


def test_max_hilbert_examples():
    assert max_hilbert_function(4, 4, 0).upto(3) == [1, 5, 9, 13]
    assert max_hilbert_function(5, 8, 0).upto(4) == [1, 6, 17, 25, 33]
    assert max_hilbert_function(3, 9, 0)(0) == 1


def test_gotzmann_examples():
    assert gotzmann_number((1,)) == 1
    assert gotzmann_number((1, 2)) == 2
    assert gotzmann_number((1, 8)) == 29


@pytest.mark.parametrize("d,g", [(d, g) for d in range(1, 11) for g in (0, 1, 2) if g <= comb(d - 1, 2)])
def test_gotzmann_closed_form_for_curves(d, g):
    assert gotzmann_number((1 - g, d)) == comb(d, 2) + 1 - g


def test_rao_dimension_examples():
    H = max_hilbert_function(3, 9, 0)
    assert rao_dimensions(H, 3, 9, 0, 4)[4] == 2
    special = HilbertFunction.from_values([1, 4, 10, 20, 33, 44, 54], (1, 9))
    assert rao_dimensions(special, 3, 9, 0, 4)[4] == 4
    acm = max_hilbert_function(4, 4, 0)
    assert set(rao_dimensions(acm, 4, 4, 0, 6)) == {0}


# --- comparison and enumeration --------------------------------------------


def test_dgin_examples():
    J = candidate_ideal()
    AR = almost_revlex_construct(max_hilbert_function(5, 8, 0), R6)
    assert dgin_compare(J, J) is DGinOrder.EQUAL
    assert dgin_compare(AR, J) is DGinOrder.GREATER
    assert dgin_compare(J, AR) is DGinOrder.LESS
    with pytest.raises(PreconditionError):
        dgin_compare(J, section_ideal().with_ring(R6))


def test_segment_dominates_same_polynomial_ideals():
    R4 = RingContext.standard(4)
    H = points_hilbert_function(4, 6)
    seg = segment_ideal_construct(H, R4)
    for J in enumerate_strongly_stable(H, R4, saturated_only=False, max_gen_degree=4):
        assert dgin_compare(seg, J) in (DGinOrder.GREATER, DGinOrder.EQUAL)


def test_enumerate_examples():
    H = max_hilbert_function(5, 8, 0)
    found = enumerate_strongly_stable(H, R6, saturated_only=True)
    assert candidate_ideal() in found
    assert almost_revlex_construct(H, R6) in found
    R3 = RingContext.standard(3)
    assert enumerate_strongly_stable(hilbert_function(zero(R3), 3), R3, saturated_only=True) == [zero(R3)]
    only = enumerate_strongly_stable(points_hilbert_function(3, 3), R3, saturated_only=True)
    assert [set(J.gen_strings()) for J in only] == [{"x2^2", "x1*x2", "x1^2"}]


def test_enumeration_node_cap():
    with pytest.raises(EnumerationLimitError):
        enumerate_strongly_stable(max_hilbert_function(5, 8, 0), R6, saturated_only=False, node_cap=5)


@pytest.mark.parametrize(
    "nvars,H",
    [
        (3, points_hilbert_function(3, 3)),
        (3, points_hilbert_function(3, 4)),
        (3, points_hilbert_function(3, 5)),
        (4, points_hilbert_function(4, 3)),
        (3, HilbertFunction.from_values([1, 3, 3], (Fraction(3),))),
    ],
)
def test_enumeration_equals_brute_force(nvars, H):
    ring = RingContext.standard(nvars)
    top = max(H.stab, 1) + 1
    fast = enumerate_strongly_stable(H, ring, saturated_only=False, max_gen_degree=top)
    slow = brute_force_strongly_stable(H, ring, top)
    assert set(fast) == set(slow)
    assert all(is_strongly_stable(J) for J in fast)


def test_screen_examples():
    R4 = RingContext.standard(4)
    assert [set(J.gen_strings()) for J in screen_candidates(3, 3, 0)] == [{"x2^2", "x2*x3", "x3^2"}]
    only = screen_candidates(4, 4, 0)
    assert len(only) == 1 and only[0] == MonomialIdeal.parse(
        RingContext.standard(5), ["x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4", "x4^2"]
    )
    found = screen_candidates(5, 8, 0)
    assert candidate_ideal() in found
    assert almost_revlex_construct(max_hilbert_function(5, 8, 0), R6) in found
    del R4


# --- aCM cases --------------------------------------------------------------


def test_acm_examples():
    assert set(acm_gin(3, 0).gen_strings()) == {"x2^2", "x2*x3", "x3^2"}
    R5 = RingContext.standard(5)
    cube_gens = {R5.format_term(e) for e in R5.terms_of_degree(3) if e[0] == e[1] == 0}
    assert set(acm_gin(4, 6).gen_strings()) == cube_gens
    J = acm_gin(3, 1)
    assert sorted(sum(e) for e in J.gens) == [2, 2, 3]
    assert J == acm_listed_generators(3, acm_lines(3, 1)[0])
    with pytest.raises(PreconditionError):
        acm_gin(4, 3)


def test_acm_listing_needs_the_index_reversal():
    assert acm_listed_generators(4, "0", reverse_indices=False) != acm_gin(4, 0)
    assert acm_listed_generators(4, "0") == acm_gin(4, 0)


# --- properties -------------------------------------------------------------


CURVE_GRID = [
    (n, d, g)
    for n in range(3, 7)
    for g in (0, 1)
    for d in range(n + g, 13)
]


@pytest.mark.parametrize("n,d,g", CURVE_GRID)
def test_almost_revlex_round_trip_on_curve_functions(n, d, g):
    ring = RingContext.standard(n + 1)
    H = max_hilbert_function(n, d, g)
    J = almost_revlex_construct(H, ring)
    assert is_almost_revlex(J)
    assert is_strongly_stable(J)
    assert hilbert_function(J).agrees(H)
    assert all(e[0] == 0 for e in J.gens)
    assert saturate_borel(J) == J


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("g", [0, 1])
def test_alpha_grows_by_at_most_one(n, g):
    for d in range(n + g + 1, 30):
        a, b = alpha_degree(n, d - 1, g), alpha_degree(n, d, g)
        assert a <= b <= a + 1


def test_segment_ideals_are_almost_revlex():
    for nvars in (3, 4, 5):
        ring = RingContext.standard(nvars)
        for k in range(1, 12):
            J = segment_ideal_construct(points_hilbert_function(nvars, k), ring)
            assert is_segment_ideal(J, J.max_degree + 1)
            assert is_almost_revlex(J)


def borel_ideal(nvars, seeds):
    """Smallest strongly stable ideal containing the given exponent tuples."""
    gens = set()
    pending = list(seeds)
    while pending:
        e = pending.pop()
        if e in gens:
            continue
        gens.add(e)
        for j in range(nvars):
            if e[j]:
                for i in range(j + 1, nvars):
                    f = list(e)
                    f[j] -= 1
                    f[i] += 1
                    pending.append(tuple(f))
    return MonomialIdeal(RingContext.standard(nvars), gens)


def iterated_quotient(J):
    while True:
        K = J.quotient_by_variable(0)
        if K == J:
            return J
        J = K


@given(st.integers(2, 5), st.data())
def test_saturate_borel_equals_iterated_quotient(nvars, data):
    seeds = data.draw(
        st.lists(st.lists(st.integers(0, 3), min_size=nvars, max_size=nvars).map(tuple), min_size=1, max_size=3)
    )
    seeds = [e for e in seeds if sum(e) > 0] or [(0,) * (nvars - 1) + (1,)]
    J = borel_ideal(nvars, seeds)
    if len(J.gens) > 12:
        J = MonomialIdeal(J.ring, J.gens[:12])
        if not is_strongly_stable(J):
            return
    assert is_strongly_stable(J)
    S = saturate_borel(J)
    assert S == iterated_quotient(J)
    assert saturate_borel(S) == S


@given(st.integers(2, 5), st.data())
def test_expansion_count_identity(nvars, data):
    seeds = data.draw(
        st.lists(st.lists(st.integers(0, 2), min_size=nvars, max_size=nvars).map(tuple), min_size=1, max_size=3)
    )
    seeds = [e for e in seeds if sum(e) > 0] or [(0,) * (nvars - 1) + (1,)]
    J = borel_ideal(nvars, seeds)
    for t in range(1, J.max_degree + 2):
        if J.gens_of_degree(t + 1):
            continue
        layer = [Term(e) for e in J.terms_of_degree(t)]
        assert len(expand(layer)) == len(J.terms_of_degree(t + 1))


def test_dgin_reflexive_and_antisymmetric():
    H = max_hilbert_function(5, 8, 0)
    found = enumerate_strongly_stable(H, R6, saturated_only=False)
    for A, B in itertools.product(found, repeat=2):
        ab, ba = dgin_compare(A, B), dgin_compare(B, A)
        if A == B:
            assert ab is DGinOrder.EQUAL
        flip = {DGinOrder.GREATER: DGinOrder.LESS, DGinOrder.LESS: DGinOrder.GREATER}
        assert ba is flip.get(ab, ab)
        if ab is DGinOrder.EQUAL:
            assert A.terms_of_degree(4) == B.terms_of_degree(4) or A == B


def test_random_strongly_stable_hilbert_functions_match_counting():
    rng = random.Random(1)
    for _ in range(30):
        nvars = rng.randint(2, 4)
        seeds = [tuple(rng.randint(0, 2) for _ in range(nvars)) for _ in range(2)]
        seeds = [e for e in seeds if sum(e)] or [(0,) * (nvars - 1) + (1,)]
        J = borel_ideal(nvars, seeds)
        H = hilbert_function(J, 6)
        ring = J.ring
        for t in range(7):
            outside = [e for e in ring.terms_of_degree(t) if not J.contains(e)]
            assert H(t) == len(outside)
