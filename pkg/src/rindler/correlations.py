"""Two-qubit correlation measures and a Monte-Carlo teleportation check.

All four measures degrade with the mixing angle r when evaluated on the
shared state: the Bell quantity reaches its local boundary only in the
infinite-acceleration limit, while concurrence, teleportation fidelity
and the measurement-induced disturbance stay strictly positive.
Entropic quantities are in bits.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

import numpy as np

from .qmat import (
    IDENTITY_2,
    PAULIS,
    SIGMA_Y,
    eig_hermitian,
    partial_trace,
    sqrt_psd,
    tensor,
    validate_density_matrix,
    von_neumann_entropy,
)

# Spectrum floor for the Wootters construction: eigenvalues this close
# to zero are roundoff on exact zeros and would blow up to ~1e-8 under
# the square root if kept.
WOOTTERS_EIG_FLOOR = 1e-12

# Marginal eigenvalue gaps below this are treated as degenerate and the
# dephasing basis falls back to the computational one.
DEGENERACY_GAP = 1e-9


class TwoQubitDecomposition(NamedTuple):
    """Bloch decomposition rho = (I + a.sigma (x) I + I (x) b.sigma + gamma)/4."""

    local_a: np.ndarray
    local_b: np.ndarray
    gamma: np.ndarray


class MeasureReport(NamedTuple):
    bell_B: float
    concurrence: float
    f_max: float
    qmid: float
    mutual_information: float


def _two_qubit(rho: np.ndarray) -> np.ndarray:
    rho = validate_density_matrix(rho)
    if rho.shape[0] != 4:
        raise ValueError(f"expected a two-qubit state, got dimension {rho.shape[0]}")
    return rho


def decompose(rho: np.ndarray) -> TwoQubitDecomposition:
    """Local Bloch vectors and the 3x3 correlation matrix of a state."""
    rho = _two_qubit(rho)
    local_a = np.array(
        [np.trace(rho @ tensor(s, IDENTITY_2)).real for s in PAULIS]
    )
    local_b = np.array(
        [np.trace(rho @ tensor(IDENTITY_2, s)).real for s in PAULIS]
    )
    gamma = np.array(
        [
            [np.trace(rho @ tensor(si, sj)).real for sj in PAULIS]
            for si in PAULIS
        ]
    )
    return TwoQubitDecomposition(local_a, local_b, gamma)


def reconstruct(dec: TwoQubitDecomposition) -> np.ndarray:
    """Rebuild the density matrix from its Bloch decomposition."""
    rho = np.eye(4, dtype=complex)
    for i, s in enumerate(PAULIS):
        rho += dec.local_a[i] * tensor(s, IDENTITY_2)
        rho += dec.local_b[i] * tensor(IDENTITY_2, s)
    for i, si in enumerate(PAULIS):
        for j, sj in enumerate(PAULIS):
            rho += dec.gamma[i, j] * tensor(si, sj)
    return rho / 4.0


def bell_B(rho: np.ndarray) -> float:
    """Sum of the two largest eigenvalues of gamma^T gamma.

    Some CHSH setting violates the classical bound exactly when the
    returned value exceeds 1.
    """
    gamma = decompose(rho).gamma
    lam = eig_hermitian(gamma.T @ gamma).eigenvalues
    return float(lam[0] + lam[1])


def concurrence(rho: np.ndarray) -> float:
    """Wootters entanglement measure of a two-qubit state.

    Complex conjugation is taken in the computational basis. The
    spin-flipped spectrum is floored at WOOTTERS_EIG_FLOOR before the
    square root, which keeps exact zeros exact.
    """
    rho = _two_qubit(rho)
    yy = tensor(SIGMA_Y, SIGMA_Y)
    root = sqrt_psd(rho)
    m = root @ yy @ rho.conj() @ yy @ root
    lam = eig_hermitian(m).eigenvalues
    lam = np.where(np.abs(lam) < WOOTTERS_EIG_FLOOR, 0.0, lam)
    vals = np.sqrt(np.clip(lam, 0.0, None))
    return float(max(0.0, vals[0] - vals[1] - vals[2] - vals[3]))


def f_max(rho: np.ndarray) -> float:
    """Best average teleportation fidelity using rho as the resource.

    Evaluates (1/2)(1 + Tr sqrt(gamma^T gamma) / 3); the classical
    threshold is 2/3.
    """
    gamma = decompose(rho).gamma
    lam = eig_hermitian(gamma.T @ gamma).eigenvalues
    trace_root = float(np.sum(np.sqrt(np.clip(lam, 0.0, None))))
    return 0.5 * (1.0 + trace_root / 3.0)


def mutual_information(rho: np.ndarray) -> float:
    """S(A) + S(B) - S(AB) in bits."""
    rho = _two_qubit(rho)
    rho_a = partial_trace(rho, [2, 2], 1)
    rho_b = partial_trace(rho, [2, 2], 0)
    return (
        von_neumann_entropy(rho_a)
        + von_neumann_entropy(rho_b)
        - von_neumann_entropy(rho)
    )


def _marginal_basis(marginal: np.ndarray) -> np.ndarray:
    dec = eig_hermitian(marginal)
    if abs(dec.eigenvalues[0] - dec.eigenvalues[1]) < DEGENERACY_GAP:
        return np.eye(2, dtype=complex)
    return dec.eigenvectors


def dephased(rho: np.ndarray) -> np.ndarray:
    """Project onto the product of the marginal eigenbases.

    Degenerate marginals (gap below DEGENERACY_GAP) dephase in the
    computational basis; this fixed convention keeps the result
    deterministic even though a degenerate marginal has no preferred
    eigenbasis.
    """
    rho = _two_qubit(rho)
    basis_a = _marginal_basis(partial_trace(rho, [2, 2], 1))
    basis_b = _marginal_basis(partial_trace(rho, [2, 2], 0))
    out = np.zeros_like(rho)
    for i in range(2):
        for j in range(2):
            proj = tensor(
                np.outer(basis_a[:, i], basis_a[:, i].conj()),
                np.outer(basis_b[:, j], basis_b[:, j].conj()),
            )
            out += proj @ rho @ proj
    return out


def qmid(rho: np.ndarray) -> float:
    """Measurement-induced disturbance: mutual information lost on dephasing."""
    return mutual_information(rho) - mutual_information(dephased(rho))


_BELL_OUTCOMES = np.array(
    [
        [[1, 0], [0, 1]],
        [[1, 0], [0, -1]],
        [[0, 1], [1, 0]],
        [[0, 1], [-1, 0]],
    ],
    dtype=complex,
) / np.sqrt(2.0)

_CORRECTIONS = (IDENTITY_2,) + PAULIS


def teleport_fidelity_mc(rho: np.ndarray, samples: int, seed: int = 0) -> float:
    """Monte-Carlo average fidelity of teleportation through rho.

    Haar-uniform pure inputs are drawn from a seeded generator, the
    sender measures in the Bell basis, and the receiver's correction
    for each outcome is chosen by brute force over all 256 assignments
    of a Pauli (or identity) to the four outcomes, maximizing the
    average fidelity.

    Parameters
    ----------
    rho : two-qubit resource state
    samples : number of Haar samples, at least 1
    seed : generator seed; identical seeds reproduce the estimate exactly
    """
    rho = _two_qubit(rho)
    samples = int(samples)
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    theta = np.arccos(1.0 - 2.0 * rng.random(samples))
    phi = 2.0 * np.pi * rng.random(samples)
    psi = np.stack(
        [np.cos(theta / 2.0), np.exp(1j * phi) * np.sin(theta / 2.0)], axis=1
    )

    # amp[n, k, b] = <bell_k| (psi_n (x) |b>) contracted on the sender pair
    amp = np.einsum("kab,na->nkb", _BELL_OUTCOMES.conj(), psi)
    rho4 = rho.reshape(2, 2, 2, 2)
    # cond[n, k] is the receiver's unnormalized post-measurement state;
    # its trace is the outcome probability q_k.
    cond = np.einsum("nkb,brcs,nkc->nkrs", amp, rho4, amp.conj())

    acc = np.empty((4, 4))
    for p_idx, pauli in enumerate(_CORRECTIONS):
        w = psi @ pauli.conj()
        fid = np.einsum("nr,nkrs,ns->nk", w.conj(), cond, w).real
        acc[:, p_idx] = fid.mean(axis=0)

    best = max(
        sum(acc[k, choice[k]] for k in range(4))
        for choice in product(range(4), repeat=4)
    )
    return float(best)


def measure_report(rho: np.ndarray) -> MeasureReport:
    """All scalar measures of one state in a single record."""
    return MeasureReport(
        bell_B=bell_B(rho),
        concurrence=concurrence(rho),
        f_max=f_max(rho),
        qmid=qmid(rho),
        mutual_information=mutual_information(rho),
    )
