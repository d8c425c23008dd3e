"""Pure-Python reference implementation of the hot kernels.

Everything here works on raw exponent tuples, ``dict`` polynomials keyed by
exponent tuples and ``gmpy2.mpq`` coefficients. The compiled twin in
``_ckernels.pyx`` exposes exactly the same functions and must return
identical results; ``tests/test_kernels.py`` checks both against each other.
"""

from heapq import heapify, heappop, heappush
from itertools import compress
from operator import le

from gmpy2 import mpq

__all__ = [
    "desc_key",
    "min_var",
    "divides",
    "expand",
    "minimalize",
    "sous_escalier_next",
    "normal_form",
    "rref",
]


def desc_key(e):
    """Sort key putting larger degrevlex terms first (x_0 is the least variable)."""
    return (-sum(e),) + tuple(e)


def min_var(e):
    for i, a in enumerate(e):
        if a:
            return i
    return len(e)


def divides(a, b):
    return all(map(le, a, b))


def expand(terms):
    """Ordered degree-(t+1) multiples of equal-degree ``terms``.

    Multiplying each block ``{tau : i <= min(tau)}`` (kept ascending) by x_i
    and concatenating over i gives each product x_i*tau with i <= min(tau)
    once, already ascending. These are all the products when the set is
    strongly stable or closed under divisors (as a sous-escalier is).
    """
    if not terms:
        return []
    nv = len(terms[0])
    asc = sorted(set(terms), key=desc_key, reverse=True)
    mins = [min_var(e) for e in asc]
    out = []
    for i in range(nv):
        for e, m in zip(asc, mins):
            if m >= i:
                out.append(e[:i] + (e[i] + 1,) + e[i + 1:])
    return out


def minimalize(gens):
    """Minimal generators (as a list, sorted by ascending degree then desc_key)."""
    kept = []
    for e in sorted(set(gens), key=lambda g: (sum(g), desc_key(g))):
        for k in kept:
            if all(map(le, k, e)):
                break
        else:
            kept.append(e)
    return kept


def sous_escalier_next(standard, new_gens):
    """Standard terms of degree t+1 given those of degree t.

    ``standard`` lists every degree-t term outside the ideal, ``new_gens`` is
    the set of minimal generators of degree t+1. A term of degree t+1 lies
    outside the ideal iff it is not a generator and all of its degree-t
    divisors lie outside the ideal.
    """
    if not standard:
        return []
    nset = set(standard)
    out = []
    for e in expand(list(standard)):
        if e in new_gens:
            continue
        ok = True
        for j, a in enumerate(e):
            if a and (e[:j] + (a - 1,) + e[j + 1:]) not in nset:
                ok = False
                break
        if ok:
            out.append(e)
    return out


def normal_form(f, basis, key, full=True):
    """Reduce ``f`` modulo a list of monic polynomials.

    ``basis`` holds ``(lm, tail)`` pairs where ``tail`` is a list of
    ``(exponent, coeff)`` for the non-leading terms of a monic polynomial.
    ``key`` maps an exponent tuple to a value that is smaller for larger
    terms. With ``full=False`` only the leading term is reduced.
    Returns the remainder as a dict.
    """
    f = dict(f)
    heap = [(key(e), e) for e in f]
    heapify(heap)
    rem = {}
    last = None
    lms = [b[0] for b in basis]
    while heap:
        k, e = heappop(heap)
        if e == last:
            continue
        last = e
        c = f.pop(e, None)
        if not c:
            continue
        for idx, lm in enumerate(lms):
            if all(map(le, lm, e)):
                q = tuple(a - b for a, b in zip(e, lm))
                for ge, gc in basis[idx][1]:
                    m = tuple(a + b for a, b in zip(ge, q))
                    v = f.get(m)
                    if v is None:
                        f[m] = -c * gc
                        heappush(heap, (key(m), m))
                    else:
                        v -= c * gc
                        if v:
                            f[m] = v
                        else:
                            del f[m]
                break
        else:
            rem[e] = c
            if not full:
                rem.update(f)
                return rem
    return rem


def rref(rows, ncols):
    """Reduced row echelon form over the rationals.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped and the
    pivot entries are 1.
    """
    work = [[mpq(x) for x in r] for r in rows]
    work = [r for r in work if any(r)]
    pivots = []
    done = []
    for col in range(ncols):
        piv = None
        for i, r in enumerate(work):
            if r[col]:
                piv = i
                break
        if piv is None:
            continue
        prow = work.pop(piv)
        inv = 1 / prow[col]
        prow = [x * inv for x in prow]
        nz = list(compress(range(ncols), prow))
        for rset in (work, done):
            for i, r in enumerate(rset):
                a = r[col]
                if a:
                    for j in nz:
                        r[j] -= a * prow[j]
        work = [r for r in work if any(r)]
        done.append(prow)
        pivots.append(col)
        if not work:
            break
    return done, pivots
