"""Pure-Python Gauss-sum kernels (fallback twin of the compiled extension).

Both twins implement the same two hot loops:

* ``gauss_profile`` -- value counts of a Z/4 quadratic form over all 2^dim
  vectors of a GF(2) space, via a Gray-code walk with O(1) updates from the
  extension rule q(x+e) = q(x) + q(e) + 2(x.e).
* ``brown_residue_set`` -- bitmask of Brown residues taken over all 2^dim
  refinements of a fixed bilinear form.

Inputs are row bitmasks (row i encodes the pairings of basis vector i) and
q values on the basis; dim must be <= 24.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def brown_from_counts(n0: int, n1: int, n2: int, n3: int) -> int:
    """Brown residue from a value-count profile, or -1 when undefined.

    The Gauss sum (n0-n2) + (n1-n3)i points in one of the eight eighth-root
    directions exactly when the form is informative; it vanishes otherwise.
    """
    a = n0 - n2
    b = n1 - n3
    if a == 0 and b == 0:
        return -1
    if b == 0:
        return 0 if a > 0 else 4
    if a == 0:
        return 2 if b > 0 else 6
    if a > 0:
        return 1 if b > 0 else 7
    return 3 if b > 0 else 5


def gauss_profile(dim, rows, q_basis):
    """Counts (n0, n1, n2, n3) of q-values over all 2^dim vectors."""
    n = [1, 0, 0, 0]
    x = 0
    q = 0
    rows = list(rows)
    qb = list(q_basis)
    for i in range(1, 1 << dim):
        t = (i & -i).bit_length() - 1
        q = (q + qb[t] + 2 * ((x & rows[t]).bit_count() & 1)) & 3
        x ^= 1 << t
        n[q] += 1
    return n[0], n[1], n[2], n[3]


def brown_residue_set(dim, rows, base_q):
    """Bitmask over {0..7} of defined Brown residues of all refinements."""
    mask = 0
    rows = list(rows)
    base = list(base_q)
    for m in range(1 << dim):
        qb = [(base[t] + 2 * ((m >> t) & 1)) & 3 for t in range(dim)]
        r = brown_from_counts(*gauss_profile(dim, rows, qb))
        if r >= 0:
            mask |= 1 << r
    return mask
