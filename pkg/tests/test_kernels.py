import itertools
import random

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from revlexgin import _kernels
from revlexgin._kernels import ckernels, pykernels


def exps(nvars, deg):
    return st.lists(st.integers(0, deg), min_size=nvars, max_size=nvars).map(tuple)


def same_degree_terms(nvars, deg):
    out = []
    for c in itertools.combinations_with_replacement(range(nvars), deg):
        e = [0] * nvars
        for i in c:
            e[i] += 1
        out.append(tuple(e))
    return out


def test_backend_selection_reports_a_known_backend():
    assert _kernels.BACKEND in ("cython", "python")
    if ckernels is None:
        assert _kernels.BACKEND == "python"


def borel_closure(terms):
    out, pending = set(), list(terms)
    while pending:
        e = pending.pop()
        if e in out:
            continue
        out.add(e)
        for j in range(len(e)):
            if e[j]:
                for i in range(j + 1, len(e)):
                    f = list(e)
                    f[j] -= 1
                    f[i] += 1
                    pending.append(tuple(f))
    return out


def test_expand_covers_all_products_of_strongly_stable_sets(kernels):
    rng = random.Random(3)
    for nvars in (2, 3, 4, 5):
        pool = same_degree_terms(nvars, 3)
        for _ in range(40):
            terms = list(borel_closure(rng.sample(pool, rng.randint(1, 3))))
            oracle = set()
            for e in terms:
                for i in range(nvars):
                    f = list(e)
                    f[i] += 1
                    oracle.add(tuple(f))
            expected = sorted(oracle, key=pykernels.desc_key, reverse=True)
            assert kernels.expand(terms) == expected


def test_minimalize_keeps_exactly_the_non_redundant_terms(kernels):
    rng = random.Random(5)
    pool = [e for t in (1, 2, 3) for e in same_degree_terms(4, t)]
    for _ in range(50):
        gens = rng.sample(pool, 8)
        kept = kernels.minimalize(gens)
        for g in gens:
            assert any(pykernels.divides(k, g) for k in kept)
        for a, b in itertools.permutations(kept, 2):
            assert not pykernels.divides(a, b)


def test_rref_rank_agrees_with_sympy(kernels):
    rng = random.Random(11)
    for _ in range(20):
        r, c = rng.randint(1, 7), rng.randint(1, 8)
        rows = [[rng.choice([0, 0, 1, -2, 3]) for _ in range(c)] for _ in range(r)]
        echelon, pivots = kernels.rref(rows, c)
        assert len(pivots) == sympy.Matrix(rows).rank()
        for i, p in enumerate(pivots):
            assert echelon[i][p] == 1
            assert all(echelon[j][p] == 0 for j in range(len(pivots)) if j != i)


def test_normal_form_reduces_to_standard_terms(kernels):
    rng = random.Random(2)
    quad = same_degree_terms(4, 2)
    quad.sort(key=pykernels.desc_key)
    basis = []
    for lm in quad[:3]:
        tail = [(e, mpq(rng.randint(-5, 5))) for e in quad[3:] if rng.random() < 0.5]
        basis.append((lm, tail))
    f = {e: mpq(rng.randint(1, 9)) for e in same_degree_terms(4, 3)}
    rem = kernels.normal_form(f, basis, kernels.desc_key, True)
    for e in rem:
        assert not any(pykernels.divides(lm, e) for lm, _ in basis)


@pytest.mark.skipif(ckernels is None, reason="compiled kernels not built")
@given(st.lists(exps(4, 3), min_size=1, max_size=12))
def test_backends_agree_on_term_kernels(terms):
    deg = sum(terms[0])
    terms = [e for e in terms if sum(e) == deg] or [terms[0]]
    assert ckernels.expand(list(terms)) == pykernels.expand(list(terms))
    assert ckernels.minimalize(terms) == pykernels.minimalize(terms)
    assert ckernels.desc_key(terms[0]) == pykernels.desc_key(terms[0])
    assert ckernels.min_var(terms[0]) == pykernels.min_var(terms[0])
    std = sorted(set(terms), key=pykernels.desc_key, reverse=True)
    assert ckernels.sous_escalier_next(std, set()) == pykernels.sous_escalier_next(std, set())


@pytest.mark.skipif(ckernels is None, reason="compiled kernels not built")
def test_backends_agree_on_linear_algebra():
    rng = random.Random(7)
    rows = [[mpq(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(9)] for _ in range(6)]
    assert ckernels.rref(rows, 9) == pykernels.rref(rows, 9)


def test_forced_fallback_runs_the_pipeline():
    import os
    import subprocess
    import sys

    code = (
        "from revlexgin import BACKEND\n"
        "from revlexgin.curves import verify_theorem\n"
        "r = verify_theorem(4, 5, 0, seed=0, screen=False)\n"
        "print(BACKEND, r.equal)\n"
    )
    env = dict(os.environ, REVLEXGIN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "True"]
