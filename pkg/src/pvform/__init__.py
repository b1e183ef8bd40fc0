"""Exact quadratic-form calculus over GF(2) and Z/4.

Brown invariants via Gauss sums and orthogonal decomposition, unimodular
lattice signatures as an independent oracle, surface homology models, the
congruence system classifying complex separations of real Enriques
surfaces, and the Z/4 fundamental-cycle solver for real curve
arrangements.
"""

__version__ = "0.1.0"
