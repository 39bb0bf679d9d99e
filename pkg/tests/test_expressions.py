import cmath

import numpy as np
from hypothesis import given
from hypothesis.strategies import floats
from pytest import approx, mark, raises

from disk_rigidity import config as app_config
from disk_rigidity.exceptions import DiskRigidityError, NonFiniteError, ParseError, PoleError
from disk_rigidity.expressions import (
    ONE, ZERO, Z, Const, add, compose, derivative, differentiate, div, evaluate, mul, power, to_rational,
    to_text,
)
from disk_rigidity.parser import parse_map

SAMPLE_MAPS = (
    "z^2-1",
    "(z+0.3)/(1+0.3*z)",
    "0.5*(z+1)+0.05*(z-1)^4",
    "mobius(2-i, i, -i, 2+i)",
    "cayinv(0.5*cayley(z)+0.2i)",
    "compose(z^2, (z+1)/2)",
)


def test_evaluate_scalar_and_array():
    expr = parse_map("z^2-1")
    assert evaluate(expr, 0.5) == approx(-0.75)
    values = evaluate(expr, np.array([[0, 1j], [0.5, 2]]))
    assert values.shape == (2, 2)
    assert values[0, 1] == approx(-2)


def test_constant_broadcasts():
    assert np.all(evaluate(Const(2j), np.zeros(5)) == 2j)


def test_evaluate_pole():
    with raises(PoleError) as info:
        evaluate(parse_map("1/(z-0.5)"), 0.5)
    assert info.value.point == 0.5


def test_evaluate_overflow():
    with raises(NonFiniteError):
        evaluate(parse_map("(1e200*z)^2"), 1.0)


def test_smart_constructors_fold():
    assert add(Const(1), Const(2)) == Const(3)
    assert add(ZERO, Z) is Z
    assert mul(ONE, Z) is Z
    assert mul(Z, ZERO) == ZERO
    assert power(Z, 1) is Z
    assert power(Z, 0) == ONE
    assert compose(Z, Z) is Z
    with raises(PoleError):
        div(Z, ZERO)


@mark.parametrize("n", [-1, app_config.MAX_INT_POWER + 1])
def test_power_outside_range_is_a_package_error(n):
    with raises(ParseError) as excinfo:
        power(Z, n)
    assert isinstance(excinfo.value, DiskRigidityError)


@mark.parametrize("text order point expected".split(),
                  (("z^3", 2, 2.0, 12.0),
                   ("z^3", 3, 0.3, 6.0),
                   ("(z+0.3)/(1+0.3*z)", 1, 1.0, 7 / 13),
                   ("cayley(z)", 1, 0.0, 2.0)))
def test_derivative_values(text, order, point, expected):
    assert evaluate(derivative(parse_map(text), order), point) == approx(expected)


@given(floats(min_value=0.0, max_value=0.85), floats(min_value=-np.pi, max_value=np.pi))
def test_derivative_matches_difference_quotient(r, theta):
    z = r * cmath.exp(1j * theta)
    h = 1e-6
    for text in SAMPLE_MAPS:
        expr = parse_map(text)
        quotient = (evaluate(expr, z + h) - evaluate(expr, z - h)) / (2 * h)
        assert abs(evaluate(differentiate(expr), z) - quotient) < 1e-5 * max(1.0, abs(quotient))


@mark.parametrize("text", SAMPLE_MAPS)
def test_text_reparses_to_the_same_map(text):
    expr = parse_map(text)
    again = parse_map(to_text(expr))
    z = np.array([0.1, -0.4j, 0.3 + 0.3j, -0.7])
    assert np.allclose(evaluate(again, z), evaluate(expr, z), rtol=1e-12, atol=1e-12)


def test_to_rational():
    p, q = to_rational(parse_map("(z+0.3)/(1+0.3*z)"))
    assert p.degree() == 1 and q.degree() == 1
    assert p(0.5) / q(0.5) == approx(0.8 / 1.15)
    assert abs(q(-1 / 0.3)) < 1e-12


def test_to_rational_of_cayley_composition():
    p, q = to_rational(parse_map("cayley(z^2)"))
    z = 0.2 + 0.1j
    assert p(z) / q(z) == approx((1 + z**2) / (1 - z**2))
