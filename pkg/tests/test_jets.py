import numpy as np
from pytest import approx, raises

from disk_rigidity.exceptions import BoundaryPoleError
from disk_rigidity.expressions import ONE, Z, CayleyFwd, mul, sub
from disk_rigidity.jets import Series, series_at, taylor_jet
from disk_rigidity.parser import parse_map


def test_series_arithmetic():
    z = Series.variable(0.5, 6)
    square = (z * z).window(0, 2)
    assert np.allclose(square, [0.25, 1.0, 1.0])
    inverse = Series.constant(1.0, 6) / (Series.constant(1.0, 6) - z)
    # 1/(1 - z) at 0.5: coefficients 2^(k+1)
    assert np.allclose(inverse.window(0, 3), [2, 4, 8, 16])


def test_series_at_tracks_valuation():
    series = series_at(CayleyFwd(Z), 1.0, 6)
    assert series.valuation == -1


def test_taylor_jet_of_rational_map():
    jet = taylor_jet(parse_map("z/(2-z)"), 1.0, 3)
    assert jet.method == "taylor"
    assert np.allclose(jet.coeffs, [1, 2, 2, 2])


def test_taylor_jet_at_other_boundary_point():
    jet = taylor_jet(parse_map("z^3"), 1j, 3)
    assert np.allclose(jet.coeffs, [-1j, -3, 3j, 1])


def test_taylor_jet_cancels_boundary_pole():
    jet = taylor_jet(mul(CayleyFwd(Z), sub(ONE, Z)), 1.0, 3)
    assert np.allclose(jet.coeffs, [2, 1, 0, 0], atol=1e-12)
    assert jet.derivative(1) == approx(1)


def test_taylor_jet_rejects_genuine_pole():
    with raises(BoundaryPoleError):
        taylor_jet(parse_map("1/(1-z)"), 1.0, 2)
