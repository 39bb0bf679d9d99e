import numpy as np
from pytest import approx, mark, raises

from disk_rigidity.boundary import (
    angular_limit, charge, halfplane_decompose, jet_at, julia_bound_check, numeric_jet, reciprocal_bound_check,
    richardson,
)
from disk_rigidity.exceptions import DivergentLimitError, InputClassError
from disk_rigidity.models import StolzProbe
from disk_rigidity.parser import parse_map


def test_richardson_removes_linear_and_quadratic_terms():
    h = 2.0 ** -np.arange(4, 10)
    values = 3 + 2 * h - 5 * h**2 + h**3
    assert np.allclose(richardson(values), 3)


def test_angular_limit_of_removable_singularity():
    limit = angular_limit(parse_map("(z^2-1)/(z-1)"))
    assert limit.value == approx(2)
    assert limit.nontangential
    assert len(limit.ray_values) == 2


def test_angular_limit_at_other_point():
    limit = angular_limit(parse_map("z^2"), StolzProbe(tau=1j))
    assert limit.value == approx(-1)


def test_angular_limit_diverges_at_pole():
    with raises(DivergentLimitError):
        angular_limit(parse_map("cayley(z)"))


def test_numeric_jet_of_black_box():
    jet = numeric_jet(lambda z: z / (2 - z), 1.0, 3)
    assert jet.method == "numeric"
    assert jet.residual_ok
    assert np.allclose(jet.coeffs[:3], [1, 2, 2], atol=1e-4)


def test_jet_at_cascade():
    assert jet_at(parse_map("z/(2-z)")).method == "symbolic"
    cancelled = jet_at(parse_map("cayley(z)*(1-z)"), 1.0, 2)
    assert cancelled.method == "taylor"
    assert np.allclose(cancelled.coeffs, [2, 1, 0], atol=1e-12)
    assert jet_at(lambda z: z**2, 1.0, 2).method == "numeric"


def test_charge_of_cayley_transform():
    result = charge(parse_map("cayley(z)"))
    assert result.delta == approx(2)
    assert result.converged
    assert charge(parse_map("1+0.5*z")).delta == approx(0, abs=1e-9)


def test_charge_requires_nonnegative_real_part():
    with raises(InputClassError):
        charge(parse_map("-1"))


def test_julia_bound_on_cayley_transform():
    report = julia_bound_check(parse_map("2*cayley(z)+0.5"), n_samples=200)
    assert report.delta == approx(4)
    assert report.ok
    assert report.counterexample is None


def test_reciprocal_bound_printed_form_fails_at_half():
    report = reciprocal_bound_check(parse_map("1-z"), n_samples=200)
    assert report.k == approx(-1)
    assert report.certified_ok
    assert not report.printed_ok
    assert report.printed_witness == approx(0.5)
    assert report.printed_lhs == approx(0.25)
    assert report.printed_rhs == approx(1 / 6)


@mark.parametrize("text", ["1-z", "(1-z)/(2-z)", "0.5*(1-z^2)"])
def test_reciprocal_bound_on_corpus(text):
    report = reciprocal_bound_check(parse_map(text), n_samples=200)
    assert report.k == approx(-1)
    assert report.certified_ok
    assert not report.printed_ok


def test_reciprocal_bound_identically_zero():
    assert reciprocal_bound_check(parse_map("0*z"), n_samples=20).identically_zero


def test_reciprocal_bound_input_class():
    with raises(InputClassError):
        reciprocal_bound_check(parse_map("1+z"), n_samples=20)


@mark.parametrize("text a b".split(), [
    ("2*cayley(z)+1", 2, 1),
    ("1.5*cayley(z)+0.5+0.25i", 1.5, 0.5 + 0.25j),
])
def test_halfplane_decompose(text, a, b):
    result = halfplane_decompose(parse_map(text))
    assert result.a == approx(a)
    assert result.b == approx(b)
    assert result.gamma_zero
    assert result.witness is None


def test_halfplane_decompose_with_residual_term():
    p = parse_map("cayley(z)+2+(1-z)^2")
    result = halfplane_decompose(p)
    assert result.a == approx(1)
    assert result.b == approx(2)
    assert not result.gamma_zero
    assert abs(result.witness) < 1
    assert p(result.witness).real < result.b.real
    assert p(result.witness).real == approx(1.576, abs=1e-2)


def test_halfplane_decompose_rejects_second_order_remainder():
    with raises(InputClassError):
        halfplane_decompose(parse_map("cayley(z)+1-z"))
