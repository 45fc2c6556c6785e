# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled order-decision kernels over bitmask predicates.

Mirrors ``_core_py`` bit for bit on carriers of at most 64 elements; the
dispatcher in ``core`` guarantees that bound before calling in.
"""

from libc.stdint cimport uint64_t


cdef inline int _first_set(uint64_t mask, int limit) nogil:
    cdef int i
    for i in range(limit):
        if (mask >> i) & 1ULL:
            return i
    return -1


cdef inline int _first_clear(uint64_t mask, int limit) nogil:
    cdef int i
    for i in range(limit):
        if not (mask >> i) & 1ULL:
            return i
    return -1


def ex_witness(int na, int nb, int nc, alpha, beta):
    """Least f: (A x B) -> C with (a,b) in alpha implying (a, f(a,b)) in beta."""
    cdef int n = na * nb
    if n == 0:
        return ()
    if nc == 0:
        return None
    cdef uint64_t am = alpha
    cdef uint64_t bm = beta
    cdef int out[64]
    cdef int a, b, c, pos
    cdef uint64_t row
    pos = 0
    for a in range(na):
        row = bm >> (a * nc)
        for b in range(nb):
            if (am >> pos) & 1ULL:
                c = _first_set(row, nc)
                if c < 0:
                    return None
                out[pos] = c
            else:
                out[pos] = 0
            pos += 1
    return tuple([out[i] for i in range(n)])


def un_witness(int na, int nb, int nc, alpha, beta):
    """Least g: (A x C) -> B with (a, g(a,c)) in alpha implying (a,c) in beta."""
    cdef int n = na * nc
    if n == 0:
        return ()
    if nb == 0:
        return None
    cdef uint64_t am = alpha
    cdef uint64_t bm = beta
    cdef int out[64]
    cdef int a, b, c, pos
    cdef uint64_t row
    pos = 0
    for a in range(na):
        row = am >> (a * nb)
        for c in range(nc):
            if (bm >> pos) & 1ULL:
                out[pos] = 0
            else:
                b = _first_clear(row, nb)
                if b < 0:
                    return None
                out[pos] = b
            pos += 1
    return tuple([out[i] for i in range(n)])


def dial_witness(int nb, int nc, int nb2, int nc2, alpha, beta):
    """Least pair (f: B -> B', F: (B x C') -> C), f major, with
    (b, F(b,c')) in alpha implying (f(b), c') in beta."""
    if nb == 0:
        return (), ()
    if nb2 == 0:
        return None
    if nc2 > 0 and nc == 0:
        return None
    cdef uint64_t am = alpha
    cdef uint64_t bm = beta
    cdef int f[64]
    cdef int bigf[64]
    cdef int npos = nb * nc2
    cdef int i, b, c2, c, pos
    cdef bint ok
    cdef uint64_t arow, brow
    for i in range(nb):
        f[i] = 0
    while True:
        ok = True
        pos = 0
        for b in range(nb):
            if not ok:
                break
            arow = am >> (b * nc)
            brow = bm >> (f[b] * nc2)
            for c2 in range(nc2):
                if (brow >> c2) & 1ULL:
                    bigf[pos] = 0
                else:
                    c = _first_clear(arow, nc)
                    if c < 0:
                        ok = False
                        break
                    bigf[pos] = c
                pos += 1
        if ok:
            return tuple([f[i] for i in range(nb)]), tuple([bigf[i] for i in range(npos)])
        i = nb - 1
        while i >= 0:
            f[i] += 1
            if f[i] < nb2:
                break
            f[i] = 0
            i -= 1
        if i < 0:
            return None
