"""Numerical tolerances shared across the library.

All channel matrices are 4x4 with entries in [-1, 1], so double precision
leaves several orders of magnitude of headroom above each threshold.
"""

EPS_TP = 1e-9          # trace preservation (first row of a transfer matrix)
EPS_HERM = 1e-9        # Hermiticity of Choi matrices
EPS_PSD = 1e-9         # positive semidefiniteness slack
EPS_RANK = 1e-7        # eigenvalue cutoff for Kraus rank / singularity
EPS_ROUNDTRIP = 1e-10  # Choi <-> transfer matrix round trips
EPS_LORENTZ = 1e-7     # eigenvalue clustering and diagonality of Sigma
EPS_EXP = 1e-9         # exp(log) reconstruction of a channel
EPS_DET = 1e-10        # sign test on the determinant (P-divisibility)
EPS_DEGENERACY = 1e-7  # relative distance at which eigenvalues count as equal
EPS_TRUNC = 1e-7       # CPTP slack for the truncated Jaynes-Cummings channel
EPS_PAULI = 1e-12      # off-diagonal mass below which a PTM counts as Pauli
