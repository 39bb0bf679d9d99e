import numpy as np
from pytest import approx

from disk_rigidity import config as app_config
from disk_rigidity.sampling import (
    boundary_angles, circle_points, disk_samples, interior_grid, polar_grid, radial_ladder, validation_grid,
)


def test_boundary_angles_are_midpoints():
    assert np.allclose(boundary_angles(4), np.pi / 4 + np.arange(4) * np.pi / 2)


def test_boundary_angles_exclude_arc():
    theta = boundary_angles(1000, exclude_arc=0.1)
    distance = np.minimum(theta, 2 * np.pi - theta)
    assert distance.min() > 0.05
    assert theta.size < 1000


def test_circle_points_centered_at_tau():
    points = circle_points(64, exclude_arc=0.2, tau=1j)
    assert np.allclose(np.abs(points), 1)
    assert np.min(np.abs(points - 1j)) > 0.09


def test_disk_samples_are_seeded():
    first = disk_samples(100, seed=3)
    assert np.array_equal(first, disk_samples(100, seed=3))
    assert not np.array_equal(first, disk_samples(100, seed=4))
    assert np.max(np.abs(first)) < 0.99


def test_grids():
    assert polar_grid(3, 5, 0.9).size == 15
    assert np.max(np.abs(interior_grid())) < 0.995
    grid = validation_grid()
    assert grid.size == app_config.VALIDATION_GRID_SIZE + app_config.VALIDATION_RIM_SIZE
    assert np.max(np.abs(grid)) == approx(app_config.VALIDATION_RIM_RADIUS)


def test_radial_ladder():
    ladder = radial_ladder(-1, 1, 3)
    assert np.allclose(ladder, [-0.5, -0.75, -0.875])
