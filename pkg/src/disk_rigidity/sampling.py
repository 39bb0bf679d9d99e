# file: src/disk_rigidity/sampling.py
"""Deterministic point sets: circle midpoints, polar disk grids and seeded disk samples."""

from typing import Optional

import numpy as np

from . import config as app_config


def boundary_angles(n: int, exclude_arc: float = 0.0, center: float = 0.0) -> np.ndarray:
    """
    Midpoint angles 2*pi*(j + 1/2)/n + center, j = 0..n-1, minus those within
    exclude_arc/2 of ``center``.
    """
    theta = 2 * np.pi * (np.arange(n) + 0.5) / n
    if exclude_arc > 0:
        distance = np.minimum(theta, 2 * np.pi - theta)
        theta = theta[distance > exclude_arc / 2]
    return theta + center


def circle_points(n: int, exclude_arc: float = 0.0, tau: complex = 1.0) -> np.ndarray:
    """n midpoint samples of the unit circle, optionally avoiding an arc centered at tau."""
    return np.exp(1j * boundary_angles(n, exclude_arc, float(np.angle(tau))))


def polar_grid(n_radii: int, n_angles: int, r_max: float) -> np.ndarray:
    radii = r_max * (np.arange(n_radii) + 0.5) / n_radii
    theta = 2 * np.pi * (np.arange(n_angles) + 0.5) / n_angles
    return (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()


def validation_grid() -> np.ndarray:
    """The 200-point interior grid plus the near-boundary rim used for sign checks."""
    interior = polar_grid(10, app_config.VALIDATION_GRID_SIZE // 10, 0.99)
    rim = app_config.VALIDATION_RIM_RADIUS * circle_points(app_config.VALIDATION_RIM_SIZE)
    return np.concatenate([interior, rim])


def interior_grid(n: int = app_config.INTERIOR_SAMPLES, r_max: float = 0.995) -> np.ndarray:
    n_radii = max(1, int(np.sqrt(n / 1.25)))
    return polar_grid(n_radii, max(1, n // n_radii), r_max)


def disk_samples(n: int, seed: Optional[int] = None, r_max: float = 0.99,
                 rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """n seeded points, uniform by area in |z| < r_max."""
    if rng is None:
        rng = np.random.default_rng(app_config.SEED if seed is None else seed)
    radius = r_max * np.sqrt(rng.random(n))
    theta = 2 * np.pi * rng.random(n)
    return radius * np.exp(1j * theta)


def radial_ladder(tau: complex = 1.0, j_min: int = app_config.LADDER_MIN,
                  j_max: int = app_config.LADDER_MAX) -> np.ndarray:
    """Points tau*(1 - 2^-j) for j = j_min..j_max."""
    return tau * (1.0 - 2.0 ** -np.arange(j_min, j_max + 1, dtype=float))
