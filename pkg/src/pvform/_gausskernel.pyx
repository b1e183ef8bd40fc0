# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-sum kernels (hot twin of _gausskernel_py).

Same contract as the pure module: Gray-code sweeps over all vectors of a
GF(2) space computing Z/4 value profiles, and the 4^dim sweep over all
refinements of a bilinear form collecting Brown residues.
"""

from libc.stdint cimport int64_t, uint64_t

IMPLEMENTATION = "c"


cdef inline int _popcount_parity(uint64_t v) nogil:
    v ^= v >> 32
    v ^= v >> 16
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return <int>(v & 1)


cdef inline int _ctz(uint64_t v) nogil:
    cdef int t = 0
    while not (v & 1):
        v >>= 1
        t += 1
    return t


cdef int _brown_from_counts_c(int64_t n0, int64_t n1, int64_t n2, int64_t n3) nogil:
    cdef int64_t a = n0 - n2
    cdef int64_t b = n1 - n3
    if a == 0 and b == 0:
        return -1
    if b == 0:
        return 0 if a > 0 else 4
    if a == 0:
        return 2 if b > 0 else 6
    if a > 0:
        return 1 if b > 0 else 7
    return 3 if b > 0 else 5


def brown_from_counts(n0, n1, n2, n3):
    """Brown residue from a value-count profile, or -1 when undefined."""
    return _brown_from_counts_c(n0, n1, n2, n3)


cdef void _profile(int dim, uint64_t *rows, int *qb, int64_t *n) nogil:
    cdef uint64_t x = 0
    cdef uint64_t i
    cdef int t, q = 0
    n[0] = 1
    n[1] = 0
    n[2] = 0
    n[3] = 0
    for i in range(1, (<uint64_t>1) << dim):
        t = _ctz(i)
        q = (q + qb[t] + 2 * _popcount_parity(x & rows[t])) & 3
        x ^= (<uint64_t>1) << t
        n[q] += 1


def gauss_profile(int dim, rows, q_basis):
    """Counts (n0, n1, n2, n3) of q-values over all 2^dim vectors."""
    cdef uint64_t crows[64]
    cdef int cqb[64]
    cdef int64_t n[4]
    cdef int t
    if dim > 24:
        raise ValueError("kernel supports dim <= 24")
    for t in range(dim):
        crows[t] = rows[t]
        cqb[t] = q_basis[t] & 3
    if dim == 0:
        return 1, 0, 0, 0
    with nogil:
        _profile(dim, crows, cqb, n)
    return n[0], n[1], n[2], n[3]


def brown_residue_set(int dim, rows, base_q):
    """Bitmask over {0..7} of defined Brown residues of all refinements."""
    cdef uint64_t crows[64]
    cdef int cbase[64]
    cdef int cqb[64]
    cdef int64_t n[4]
    cdef uint64_t m
    cdef int t, r, mask = 0
    if dim > 24:
        raise ValueError("kernel supports dim <= 24")
    for t in range(dim):
        crows[t] = rows[t]
        cbase[t] = base_q[t] & 3
    if dim == 0:
        return 1  # single empty refinement: Brown 0
    with nogil:
        for m in range((<uint64_t>1) << dim):
            for t in range(dim):
                cqb[t] = (cbase[t] + 2 * ((m >> t) & 1)) & 3
            _profile(dim, crows, cqb, n)
            r = _brown_from_counts_c(n[0], n[1], n[2], n[3])
            if r >= 0:
                mask |= 1 << r
    return mask
