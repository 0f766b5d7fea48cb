"""Acceleration-induced mode mixing for a single Dirac mode.

Natural units throughout (hbar = c = k_B = 1). The mixing angle r sits
in [0, pi/4): r = 0 is an observer at rest, r -> pi/4 is the infinite
acceleration limit where cos^2 r -> 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

R_MAX = np.pi / 4


def cos_r(a: float, omega: float) -> float:
    """Mode-mixing cosine for acceleration a and mode frequency omega.

    Returns 1/sqrt(exp(-2 pi omega / a) + 1), which decreases
    monotonically from 1 (a -> 0) to 1/sqrt(2) (a -> infinity).
    """
    if a <= 0:
        raise ValueError(f"acceleration must be positive, got {a}")
    if omega <= 0:
        raise ValueError(f"mode frequency must be positive, got {omega}")
    return float(1.0 / np.sqrt(np.exp(-2.0 * np.pi * omega / a) + 1.0))


def unruh_temperature(a: float) -> float:
    """Thermal temperature a / (2 pi) perceived at proper acceleration a."""
    if a <= 0:
        raise ValueError(f"acceleration must be positive, got {a}")
    return float(a / (2.0 * np.pi))


@dataclass(frozen=True)
class UnruhParams:
    """Acceleration a, mode frequency omega, and the derived angle r."""

    a: float
    omega: float
    r: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "r", float(np.arccos(cos_r(self.a, self.omega))))


def _check_angle(r: float) -> float:
    if not 0.0 <= r <= R_MAX + 1e-12:
        raise ValueError(f"mixing angle {r} outside [0, pi/4]")
    return float(r)


def three_mode_state(r: float) -> np.ndarray:
    """Pure state of (observer A, wedge-I mode, wedge-II mode) as an 8-vector.

    The inertial half of the entangled pair expands over the two wedge
    modes: the vacuum contributes cos r |00> + sin r |11>, the excited
    mode occupies wedge I only. Basis order |A>|I>|II>.
    """
    r = _check_angle(r)
    psi = np.zeros(8, dtype=complex)
    psi[0b000] = np.cos(r) / np.sqrt(2.0)
    psi[0b011] = np.sin(r) / np.sqrt(2.0)
    psi[0b110] = 1.0 / np.sqrt(2.0)
    return psi


def shared_state(r: float) -> np.ndarray:
    """Two-qubit state held by A and the wedge-I observer.

    This is the mode-II partial trace of three_mode_state(r): an X-form
    matrix with diagonal (cos^2 r, sin^2 r, 0, 1)/2 and coherence
    cos(r)/2 between |00> and |11>. At r = 0 it is the maximally
    entangled pair.
    """
    r = _check_angle(r)
    c = np.cos(r)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = c * c / 2.0
    rho[0, 3] = c / 2.0
    rho[3, 0] = c / 2.0
    rho[1, 1] = np.sin(r) ** 2 / 2.0
    rho[3, 3] = 0.5
    return rho
