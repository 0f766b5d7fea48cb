"""Bloch-sphere picture of the acceleration channel.

The channel maps the unit sphere onto an oblate spheroid centered at
(0, 0, -sin^2 r) with equatorial semi-axis cos r and polar semi-axis
cos^2 r; the image surface touches the unit sphere at the south pole
for every r. All general-r formulas here are validated in the test
suite against direct channel application.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .qmat import SIGMA_X, SIGMA_Y, SIGMA_Z
from .unruh import _check_angle


class BlochVector(NamedTuple):
    x: float
    y: float
    z: float


class SpheroidReport(NamedTuple):
    center: BlochVector
    semi_axis_equatorial: float
    semi_axis_polar: float
    eccentricity: float
    volume_fraction: float


def bloch_of(rho: np.ndarray) -> BlochVector:
    """Coordinates (Tr rho sigma_x, Tr rho sigma_y, Tr rho sigma_z)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"expected a qubit state, got shape {rho.shape}")
    return BlochVector(
        float(np.trace(rho @ SIGMA_X).real),
        float(np.trace(rho @ SIGMA_Y).real),
        float(np.trace(rho @ SIGMA_Z).real),
    )


def _check_sphere_angles(theta: float, phi: float) -> tuple[float, float]:
    if not 0.0 <= theta <= np.pi + 1e-12:
        raise ValueError(f"polar angle {theta} outside [0, pi]")
    if not 0.0 <= phi < 2.0 * np.pi:
        raise ValueError(f"azimuthal angle {phi} outside [0, 2*pi)")
    return float(theta), float(phi)


def image_of_pure(theta: float, phi: float, r: float) -> BlochVector:
    """Bloch vector of the channel output for the pure input (theta, phi).

    Closed form: the equatorial components shrink by cos r and the
    polar one becomes cos(2r) cos^2(theta/2) - sin^2(theta/2).
    """
    theta, phi = _check_sphere_angles(theta, phi)
    r = _check_angle(r)
    sin_t = np.sin(theta)
    return BlochVector(
        float(np.cos(r) * sin_t * np.cos(phi)),
        float(np.cos(r) * sin_t * np.sin(phi)),
        float(np.cos(2.0 * r) * np.cos(theta / 2.0) ** 2 - np.sin(theta / 2.0) ** 2),
    )


def radius_from_center(theta: float) -> float:
    """Distance of the infinite-acceleration image from its center (0,0,-1/2).

    Equals sqrt(3 - cos 2 theta) / (2 sqrt 2): 1/2 at the poles, 1/sqrt 2
    on the equator.
    """
    if not 0.0 <= theta <= np.pi + 1e-12:
        raise ValueError(f"polar angle {theta} outside [0, pi]")
    return float(np.sqrt(3.0 - np.cos(2.0 * theta)) / (2.0 * np.sqrt(2.0)))


def _image_cross_section_area(theta: float, r: float) -> float:
    # pi (x^2 + y^2) of the image at polar angle theta; phi-independent.
    return float(np.pi * (np.cos(r) * np.sin(theta)) ** 2)


def _image_dz_dtheta(theta: float, r: float) -> float:
    # derivative of the image z(theta); the (1 + cos 2r)/2 factor is cos^2 r
    return float(-(np.cos(r) ** 2) * np.sin(theta))


def spheroid_report(r: float, integration_steps: int = 10000) -> SpheroidReport:
    """Geometric summary of the channel's image of the Bloch sphere.

    The volume fraction is computed numerically, slicing the image solid
    perpendicular to the z axis and integrating cross-section area times
    |dz| with composite Simpson over theta.

    Parameters
    ----------
    r : mixing angle in [0, pi/4]
    integration_steps : Simpson subintervals, at least 100 (odd counts
        are rounded up to even)
    """
    r = _check_angle(r)
    steps = int(integration_steps)
    if steps < 100:
        raise ValueError(f"integration_steps must be >= 100, got {steps}")
    if steps % 2:
        steps += 1

    thetas = np.linspace(0.0, np.pi, steps + 1)
    integrand = np.array(
        [
            _image_cross_section_area(t, r) * abs(_image_dz_dtheta(t, r))
            for t in thetas
        ]
    )
    h = np.pi / steps
    weights = np.ones(steps + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    volume = float(h / 3.0 * np.dot(weights, integrand))
    fraction = volume / (4.0 * np.pi / 3.0)

    equatorial = float(np.cos(r))
    polar = float(np.cos(r) ** 2)
    eccentricity = float(np.sqrt(1.0 - (polar / equatorial) ** 2))
    center = BlochVector(0.0, 0.0, -float(np.sin(r) ** 2))
    return SpheroidReport(center, equatorial, polar, eccentricity, fraction)


def surface_grid(r: float, n_theta: int, n_phi: int):
    """Image points on a (theta, phi) grid as (theta, phi, BlochVector) rows.

    theta runs over n_theta points including both poles; phi over n_phi
    points with the 2*pi endpoint excluded.
    """
    if n_theta < 2 or n_phi < 2:
        raise ValueError(f"grid counts must be >= 2, got {n_theta} x {n_phi}")
    rows = []
    for theta in np.linspace(0.0, np.pi, int(n_theta)):
        for phi in np.linspace(0.0, 2.0 * np.pi, int(n_phi), endpoint=False):
            rows.append((float(theta), float(phi), image_of_pure(theta, phi, r)))
    return rows


def sample_surface(r: float, n_theta: int, n_phi: int) -> list[BlochVector]:
    """Image vectors only, in the same grid order as surface_grid."""
    return [vec for _, _, vec in surface_grid(r, n_theta, n_phi)]
