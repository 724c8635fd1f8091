"""Pauli matrices, the maximally entangled projector, and two-qubit helpers.

The operator basis used everywhere is the normalized Pauli basis
{1/sqrt2, sx/sqrt2, sy/sqrt2, sz/sqrt2} in this fixed order; 4x4 transfer
matrices are written in it.  Two-qubit matrices use the Kronecker convention
kron(first factor, second factor) where the first factor is the untouched
half of the maximally entangled state and the second carries the channel
action.
"""

import numpy as np

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (SIGMA_0, SIGMA_X, SIGMA_Y, SIGMA_Z)

# Minkowski metric and the partial-transpose sign matrix diag(1, 1, -1, 1);
# R = ptm @ PHI_T is the Pauli-basis matrix of the Choi state.
ETA = np.diag([1.0, -1.0, -1.0, -1.0])
PHI_T = np.diag([1.0, 1.0, -1.0, 1.0])

# Projector onto the maximally entangled state (1/sqrt2)(|00> + |11>).
_bell = np.zeros(4, dtype=complex)
_bell[0] = _bell[3] = 1.0 / np.sqrt(2.0)
OMEGA = np.outer(_bell, _bell.conj())

# CHOI_BASIS[a, b] = sigma_b^T (x) sigma_a, the expansion operators of the
# Choi state: choi = (1/4) sum_ab ptm[a, b] * CHOI_BASIS[a, b].
CHOI_BASIS = np.empty((4, 4, 4, 4), dtype=complex)
for _a in range(4):
    for _b in range(4):
        CHOI_BASIS[_a, _b] = np.kron(PAULIS[_b].T, PAULIS[_a])
del _a, _b, _bell


def partial_trace_first(mat):
    """Trace out the first qubit of a 4x4 two-qubit matrix."""
    m = np.asarray(mat).reshape(2, 2, 2, 2)
    return m[0, :, 0, :] + m[1, :, 1, :]


def partial_trace_second(mat):
    """Trace out the second qubit of a 4x4 two-qubit matrix."""
    m = np.asarray(mat).reshape(2, 2, 2, 2)
    return m[:, 0, :, 0] + m[:, 1, :, 1]


def partial_transpose(mat):
    """Transpose the second factor of a 4x4 two-qubit matrix."""
    m = np.asarray(mat).reshape(2, 2, 2, 2)
    return m.transpose(0, 3, 2, 1).reshape(4, 4)
