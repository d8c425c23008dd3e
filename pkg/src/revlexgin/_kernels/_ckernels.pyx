# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``: same functions, same results.

Exponent bookkeeping runs on C longs; coefficients stay ``gmpy2.mpq``.
"""

from heapq import heapify, heappop, heappush

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


cpdef tuple desc_key(e):
    cdef tuple t = e if type(e) is tuple else tuple(e)
    cdef long s = 0
    cdef Py_ssize_t i
    for i in range(len(t)):
        s += <long>t[i]
    return (-s,) + t


cpdef Py_ssize_t min_var(tuple e):
    cdef Py_ssize_t i
    for i in range(len(e)):
        if <long>e[i]:
            return i
    return len(e)


cpdef bint divides(tuple a, tuple b):
    cdef Py_ssize_t i
    for i in range(len(a)):
        if <long>a[i] > <long>b[i]:
            return False
    return True


cdef tuple _bump(tuple e, Py_ssize_t i, long by):
    cdef list out = list(e)
    out[i] = <long>out[i] + by
    return tuple(out)


cpdef list expand(list terms):
    """Ordered degree-(t+1) multiples of equal-degree ``terms``."""
    if not terms:
        return []
    cdef Py_ssize_t nv = len(terms[0])
    cdef list asc = sorted(set(terms), key=desc_key, reverse=True)
    cdef list mins = [min_var(e) for e in asc]
    cdef list out = []
    cdef Py_ssize_t i, k, n = len(asc)
    for i in range(nv):
        for k in range(n):
            if <Py_ssize_t>mins[k] >= i:
                out.append(_bump(<tuple>asc[k], i, 1))
    return out


def _deg_key(tuple g):
    return (sum(g), desc_key(g))


cpdef list minimalize(gens):
    cdef list kept = []
    cdef tuple e, k
    cdef bint hit
    for e in sorted(set(gens), key=_deg_key):
        hit = False
        for k in kept:
            if divides(k, e):
                hit = True
                break
        if not hit:
            kept.append(e)
    return kept


cpdef list sous_escalier_next(list standard, new_gens):
    if not standard:
        return []
    cdef set nset = set(standard)
    cdef list out = []
    cdef tuple e
    cdef Py_ssize_t j
    cdef bint ok
    for e in expand(standard):
        if e in new_gens:
            continue
        ok = True
        for j in range(len(e)):
            if <long>e[j] and _bump(e, j, -1) not in nset:
                ok = False
                break
        if ok:
            out.append(e)
    return out


cdef tuple _add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = <long>a[i] + <long>b[i]
    return tuple(out)


cdef tuple _sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = <long>a[i] - <long>b[i]
    return tuple(out)


cpdef dict normal_form(f, list basis, key, bint full=True):
    """Reduce ``f`` modulo monic ``(lm, tail)`` pairs; see the Python twin."""
    cdef dict poly = dict(f)
    cdef list heap = [(key(e), e) for e in poly]
    heapify(heap)
    cdef dict rem = {}
    cdef object last = None
    cdef list lms = [b[0] for b in basis]
    cdef Py_ssize_t idx, nb = len(lms)
    cdef tuple e, lm, q, m, ge
    cdef object c, v, gc
    while heap:
        e = heappop(heap)[1]
        if e == last:
            continue
        last = e
        c = poly.pop(e, None)
        if not c:
            continue
        for idx in range(nb):
            lm = <tuple>lms[idx]
            if divides(lm, e):
                q = _sub(e, lm)
                for ge, gc in basis[idx][1]:
                    m = _add(ge, q)
                    v = poly.get(m)
                    if v is None:
                        poly[m] = -c * gc
                        heappush(heap, (key(m), m))
                    else:
                        v = v - c * gc
                        if v:
                            poly[m] = v
                        else:
                            del poly[m]
                break
        else:
            rem[e] = c
            if not full:
                rem.update(poly)
                return rem
    return rem


cpdef tuple rref(rows, Py_ssize_t ncols):
    """Reduced row echelon form over the rationals: ``(rows, pivot_columns)``."""
    cdef list work = [[mpq(x) for x in r] for r in rows]
    work = [r for r in work if any(r)]
    cdef list pivots = []
    cdef list done = []
    cdef Py_ssize_t col, i, j, piv
    cdef list prow, r, nz
    cdef object inv, a
    for col in range(ncols):
        piv = -1
        for i in range(len(work)):
            if (<list>work[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        prow = work.pop(piv)
        inv = 1 / prow[col]
        prow = [x * inv for x in prow]
        nz = [j for j in range(ncols) if prow[j]]
        for r in work:
            a = r[col]
            if a:
                for j in nz:
                    r[j] = r[j] - a * prow[j]
        for r in done:
            a = r[col]
            if a:
                for j in nz:
                    r[j] = r[j] - a * prow[j]
        work = [r for r in work if any(r)]
        done.append(prow)
        pivots.append(col)
        if not work:
            break
    return done, pivots
