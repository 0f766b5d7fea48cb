"""Qubit channel algebra: Kraus maps, Choi matrices, and the inverse map.

A KrausMap is an ordered list of (sign, operator) pairs realizing
rho -> sum_j sign_j K_j rho K_j^dag. All-positive signs with
sum K^dag K = I is an ordinary CP trace-preserving channel; the signed
form covers Hermitian maps written as a difference of two CP pieces,
which is exactly what the inverse of the acceleration channel needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .qmat import eig_hermitian, is_hermitian, tensor
from .unruh import _check_angle

KRAUS_RANK_FLOOR = 1e-12


@dataclass(frozen=True)
class KrausMap:
    """Signed operator-sum representation of a Hermitian qubit map."""

    terms: tuple
    label: str = ""

    def __post_init__(self):
        cleaned = []
        for sign, op in self.terms:
            if sign not in (1, -1):
                raise ValueError(f"term sign must be +1 or -1, got {sign}")
            op = np.asarray(op, dtype=complex)
            if op.ndim != 2 or op.shape[0] != op.shape[1]:
                raise ValueError(f"Kraus operator must be square, got {op.shape}")
            cleaned.append((int(sign), op))
        dims = {op.shape[0] for _, op in cleaned}
        if len(dims) > 1:
            raise ValueError(f"mixed Kraus operator dimensions {sorted(dims)}")
        object.__setattr__(self, "terms", tuple(cleaned))

    @property
    def dim(self) -> int:
        return self.terms[0][1].shape[0]

    @property
    def is_signed(self) -> bool:
        return any(sign < 0 for sign, _ in self.terms)


@dataclass(frozen=True)
class ChoiMatrix:
    """4x4 dual matrix of a qubit map.

    doubled=True means the sum_{jk} |j><k| (x) E(|j><k|) convention with
    trace 2 for a trace-preserving map; doubled=False carries the extra
    factor 1/2 so the matrix is itself a unit-trace state.
    """

    matrix: np.ndarray
    doubled: bool = True

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"Choi matrix must be 4x4, got {m.shape}")
        if not is_hermitian(m):
            raise ValueError("Choi matrix is not Hermitian within 1e-10")
        object.__setattr__(self, "matrix", m)

    def state_normalized(self) -> "ChoiMatrix":
        if not self.doubled:
            return self
        return ChoiMatrix(self.matrix / 2.0, doubled=False)


class CpVerdict(NamedTuple):
    is_cp: bool
    min_eigenvalue: float


def unruh_kraus(r: float) -> KrausMap:
    """Channel seen by the accelerated observer, with mixing angle r.

    Two operators: diag(cos r, 1) and the lowering term sin r |1><0|.
    Formally an amplitude damping channel of strength sin^2 r, except
    the damping drives population toward |1> rather than |0>.
    """
    r = _check_angle(r)
    k1 = np.array([[np.cos(r), 0.0], [0.0, 1.0]], dtype=complex)
    k2 = np.array([[0.0, 0.0], [np.sin(r), 0.0]], dtype=complex)
    return KrausMap(((1, k1), (1, k2)), label=f"unruh(r={r:.6g})")


def amplitude_damping(gamma: float) -> KrausMap:
    """Damping channel with operators diag(sqrt(1-gamma), 1), sqrt(gamma)|1><0|.

    The convention matches unruh_kraus, so amplitude_damping(sin^2 r)
    acts identically to unruh_kraus(r).
    """
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"damping strength {gamma} outside [0, 1]")
    k1 = np.array([[np.sqrt(1.0 - gamma), 0.0], [0.0, 1.0]], dtype=complex)
    k2 = np.array([[0.0, 0.0], [np.sqrt(gamma), 0.0]], dtype=complex)
    return KrausMap(((1, k1), (1, k2)), label=f"ad(gamma={gamma:.6g})")


def inverse_unruh(r: float) -> KrausMap:
    """Formal inverse of unruh_kraus(r), a difference of two CP pieces.

    Terms (+1, diag(1/cos r, 1)) and (-1, tan r |1><0|). The signed
    completeness relation K1^dag K1 - K2^dag K2 = I holds, and the map
    undoes the channel exactly, but its Choi matrix has a negative
    eigenvalue for every r > 0, so it is not completely positive.
    """
    r = _check_angle(r)
    c = np.cos(r)
    if c == 0.0:
        raise ValueError("mixing angle too close to pi/2, inverse is singular")
    k1 = np.array([[1.0 / c, 0.0], [0.0, 1.0]], dtype=complex)
    k2 = np.array([[0.0, 0.0], [np.tan(r), 0.0]], dtype=complex)
    return KrausMap(((1, k1), (-1, k2)), label=f"inverse-unruh(r={r:.6g})")


def apply(kmap: KrausMap, rho: np.ndarray) -> np.ndarray:
    """Evaluate sum_j sign_j K_j rho K_j^dag.

    rho may be any square matrix of matching dimension; linearity on
    the full operator basis is what the Choi construction relies on.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (kmap.dim, kmap.dim):
        raise ValueError(
            f"state shape {rho.shape} does not match map dimension {kmap.dim}"
        )
    out = np.zeros_like(rho)
    for sign, op in kmap.terms:
        out += sign * (op @ rho @ op.conj().T)
    return out


def apply_to_second(kmap: KrausMap, rho: np.ndarray) -> np.ndarray:
    """Act with the map on the second qubit of a two-qubit state."""
    rho = np.asarray(rho, dtype=complex)
    d = 2 * kmap.dim
    if rho.shape != (d, d):
        raise ValueError(f"state shape {rho.shape} does not match dimension {d}")
    eye = np.eye(kmap.dim, dtype=complex)
    out = np.zeros_like(rho)
    for sign, op in kmap.terms:
        big = tensor(eye, op)
        out += sign * (big @ rho @ big.conj().T)
    return out


def completeness_defect(kmap: KrausMap) -> float:
    """Max-norm distance of sum_j sign_j K_j^dag K_j from the identity."""
    acc = np.zeros((kmap.dim, kmap.dim), dtype=complex)
    for sign, op in kmap.terms:
        acc += sign * (op.conj().T @ op)
    return float(np.max(np.abs(acc - np.eye(kmap.dim))))


def compose(outer: KrausMap, inner: KrausMap) -> KrausMap:
    """Map applying inner first, then outer; term signs multiply."""
    if outer.dim != inner.dim:
        raise ValueError(f"dimension mismatch {outer.dim} vs {inner.dim}")
    terms = []
    for so, ko in outer.terms:
        for si, ki in inner.terms:
            terms.append((so * si, ko @ ki))
    return KrausMap(tuple(terms), label=f"{outer.label}*{inner.label}")


def choi_matrix(kmap: KrausMap, doubled: bool = True) -> ChoiMatrix:
    """Dual matrix sum_{jk} |j><k| (x) E(|j><k|) of a qubit map."""
    if kmap.dim != 2:
        raise ValueError(f"Choi construction expects a qubit map, dim {kmap.dim}")
    basis = np.eye(2, dtype=complex)
    m = np.zeros((4, 4), dtype=complex)
    for j in range(2):
        for k in range(2):
            ejk = np.outer(basis[j], basis[k])
            m += tensor(ejk, apply(kmap, ejk))
    choi = ChoiMatrix(m, doubled=True)
    return choi if doubled else choi.state_normalized()


def kraus_from_choi(choi: ChoiMatrix) -> KrausMap:
    """Recover a signed operator-sum form from a Choi matrix.

    Each eigenvector with |eigenvalue| above 1e-12 is scaled to norm
    sqrt(|eigenvalue|) and folded column-major, (v0,v1,v2,v3) becoming
    [[v0, v2], [v1, v3]]; the eigenvalue's sign becomes the term sign.
    """
    m = choi.matrix if choi.doubled else 2.0 * choi.matrix
    dec = eig_hermitian(m)
    terms = []
    for lam, vec in zip(dec.eigenvalues, dec.eigenvectors.T):
        if abs(lam) <= KRAUS_RANK_FLOOR:
            continue
        scaled = np.sqrt(abs(lam)) * vec
        op = scaled.reshape(2, 2, order="F")
        terms.append((1 if lam > 0 else -1, op))
    return KrausMap(tuple(terms), label="from-choi")


def is_cp(choi: ChoiMatrix) -> CpVerdict:
    """Complete positivity test: all Choi eigenvalues >= -1e-10.

    The reported minimum eigenvalue is in the normalization of the
    input (doubled or state form).
    """
    lam = eig_hermitian(choi.matrix).eigenvalues
    return CpVerdict(bool(lam[-1] >= -1e-10), float(lam[-1]))
