# file: src/disk_rigidity/expressions.py
"""
Expression trees for holomorphic maps of the unit disk.

Nodes are frozen dataclasses, so trees are immutable and hashable. Evaluation,
differentiation, printing and reduction to a rational function are
single-dispatch functions over the node classes.
"""

from dataclasses import dataclass
from functools import lru_cache, singledispatch
from typing import Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial

from . import config as app_config
from .exceptions import NonFiniteError, ParseError, PoleError
from .mobius import Mobius

Value = Union[complex, np.ndarray]


class MapExpr:
    """Base class of all expression nodes."""

    precedence = 4

    def __add__(self, other):
        return add(self, as_expr(other))

    def __radd__(self, other):
        return add(as_expr(other), self)

    def __sub__(self, other):
        return sub(self, as_expr(other))

    def __rsub__(self, other):
        return sub(as_expr(other), self)

    def __mul__(self, other):
        return mul(self, as_expr(other))

    def __rmul__(self, other):
        return mul(as_expr(other), self)

    def __truediv__(self, other):
        return div(self, as_expr(other))

    def __rtruediv__(self, other):
        return div(as_expr(other), self)

    def __pow__(self, n: int):
        return power(self, n)

    def __neg__(self):
        return neg(self)

    def __call__(self, z: Value) -> Value:
        return evaluate(self, z)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Var(MapExpr):
    pass


@dataclass(frozen=True)
class Const(MapExpr):
    value: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", complex(self.value))

    @property
    def precedence(self) -> int:
        re, im = self.value.real, self.value.imag
        if (im == 0 and re < 0) or (re == 0 and im < 0):
            return 3
        return 4


@dataclass(frozen=True)
class Add(MapExpr):
    left: MapExpr
    right: MapExpr
    precedence = 1


@dataclass(frozen=True)
class Sub(MapExpr):
    left: MapExpr
    right: MapExpr
    precedence = 1


@dataclass(frozen=True)
class Mul(MapExpr):
    left: MapExpr
    right: MapExpr
    precedence = 2


@dataclass(frozen=True)
class Div(MapExpr):
    left: MapExpr
    right: MapExpr
    precedence = 2


@dataclass(frozen=True)
class IntPow(MapExpr):
    base: MapExpr
    n: int
    precedence = 3

    def __post_init__(self) -> None:
        if not 0 <= self.n <= app_config.MAX_INT_POWER:
            raise ParseError(
                f"Integer power {self.n} outside 0..{app_config.MAX_INT_POWER}; use compose() for higher powers."
            )


@dataclass(frozen=True)
class Compose(MapExpr):
    """outer(inner(z))."""

    outer: MapExpr
    inner: MapExpr


@dataclass(frozen=True)
class CayleyFwd(MapExpr):
    """C(w) = (1 + w)/(1 - w) applied to the argument."""

    arg: MapExpr


@dataclass(frozen=True)
class CayleyInv(MapExpr):
    """C^-1(w) = (w - 1)/(w + 1) applied to the argument."""

    arg: MapExpr


@dataclass(frozen=True)
class MobiusNode(MapExpr):
    """The map z -> M(z)."""

    mobius: Mobius


Z = Var()
ZERO = Const(0)
ONE = Const(1)


def as_expr(value) -> MapExpr:
    if isinstance(value, MapExpr):
        return value
    return Const(value)


def _const(x: MapExpr, value: complex) -> bool:
    return isinstance(x, Const) and x.value == value


# Smart constructors: fold constants and drop neutral elements.

def add(x: MapExpr, y: MapExpr) -> MapExpr:
    if isinstance(x, Const) and isinstance(y, Const):
        return Const(x.value + y.value)
    if _const(x, 0):
        return y
    if _const(y, 0):
        return x
    return Add(x, y)


def sub(x: MapExpr, y: MapExpr) -> MapExpr:
    if isinstance(x, Const) and isinstance(y, Const):
        return Const(x.value - y.value)
    if _const(y, 0):
        return x
    return Sub(x, y)


def mul(x: MapExpr, y: MapExpr) -> MapExpr:
    if isinstance(x, Const) and isinstance(y, Const):
        return Const(x.value * y.value)
    if _const(x, 0) or _const(y, 0):
        return ZERO
    if _const(x, 1):
        return y
    if _const(y, 1):
        return x
    return Mul(x, y)


def div(x: MapExpr, y: MapExpr) -> MapExpr:
    if _const(y, 0):
        raise PoleError("Division by an identically zero denominator.")
    if isinstance(x, Const) and isinstance(y, Const):
        return Const(x.value / y.value)
    if _const(y, 1):
        return x
    return Div(x, y)


def power(x: MapExpr, n: int) -> MapExpr:
    if n == 0:
        return ONE
    if n == 1:
        return x
    if isinstance(x, Const):
        return Const(x.value**n)
    return IntPow(x, n)


def neg(x: MapExpr) -> MapExpr:
    if isinstance(x, Const):
        return Const(-x.value)
    return Mul(Const(-1), x)


def compose(outer: MapExpr, inner: MapExpr) -> MapExpr:
    if isinstance(outer, (Var, Const)):
        return inner if isinstance(outer, Var) else outer
    if isinstance(inner, Var):
        return outer
    return Compose(outer, inner)


# Evaluation

@singledispatch
def _eval(node: MapExpr, z: Value) -> Value:
    raise TypeError(f"Cannot evaluate node {type(node).__name__}")


@_eval.register
def _(node: Var, z):
    return z


@_eval.register
def _(node: Const, z):
    return node.value


@_eval.register
def _(node: Add, z):
    return _eval(node.left, z) + _eval(node.right, z)


@_eval.register
def _(node: Sub, z):
    return _eval(node.left, z) - _eval(node.right, z)


@_eval.register
def _(node: Mul, z):
    return _eval(node.left, z) * _eval(node.right, z)


def _checked_quotient(num: Value, den: Value, what: str) -> Value:
    if np.any(den == 0):
        raise PoleError(f"Zero denominator in {what}.")
    return num / den


@_eval.register
def _(node: Div, z):
    return _checked_quotient(_eval(node.left, z), _eval(node.right, z), "division")


@_eval.register
def _(node: IntPow, z):
    return _eval(node.base, z) ** node.n


@_eval.register
def _(node: Compose, z):
    return _eval(node.outer, _eval(node.inner, z))


@_eval.register
def _(node: CayleyFwd, z):
    w = _eval(node.arg, z)
    return _checked_quotient(1 + w, 1 - w, "cayley")


@_eval.register
def _(node: CayleyInv, z):
    w = _eval(node.arg, z)
    return _checked_quotient(w - 1, w + 1, "cayinv")


@_eval.register
def _(node: MobiusNode, z):
    return node.mobius(z)


def evaluate(expr: MapExpr, z: Value) -> Value:
    """
    Value of expr at a point or, vectorised, at an array of points.

    Raises PoleError at a zero denominator and NonFiniteError when an
    intermediate overflows.
    """
    scalar = np.ndim(z) == 0
    point = complex(z) if scalar else np.asarray(z, dtype=complex)
    try:
        with np.errstate(all="ignore"):
            result = _eval(expr, point)
    except PoleError as e:
        if scalar and e.point is None:
            raise PoleError(f"{e} at z = {point}", point)
        raise
    except (OverflowError, ZeroDivisionError) as e:
        raise NonFiniteError(f"Non-finite intermediate while evaluating {to_text(expr)}: {e}")
    if not np.all(np.isfinite(result)):
        raise NonFiniteError(f"Non-finite value of {to_text(expr)} at {point}")
    if scalar:
        return complex(result)
    return np.broadcast_to(np.asarray(result, dtype=complex), point.shape).copy()


# Differentiation

@singledispatch
def _diff(node: MapExpr) -> MapExpr:
    raise TypeError(f"Cannot differentiate node {type(node).__name__}")


@_diff.register
def _(node: Var):
    return ONE


@_diff.register
def _(node: Const):
    return ZERO


@_diff.register
def _(node: Add):
    return add(differentiate(node.left), differentiate(node.right))


@_diff.register
def _(node: Sub):
    return sub(differentiate(node.left), differentiate(node.right))


@_diff.register
def _(node: Mul):
    u, v = node.left, node.right
    return add(mul(differentiate(u), v), mul(u, differentiate(v)))


@_diff.register
def _(node: Div):
    u, v = node.left, node.right
    return div(sub(mul(differentiate(u), v), mul(u, differentiate(v))), power(v, 2))


@_diff.register
def _(node: IntPow):
    return mul(mul(Const(node.n), power(node.base, node.n - 1)), differentiate(node.base))


@_diff.register
def _(node: Compose):
    return mul(compose(differentiate(node.outer), node.inner), differentiate(node.inner))


@_diff.register
def _(node: CayleyFwd):
    w = node.arg
    return mul(div(Const(2), power(sub(ONE, w), 2)), differentiate(w))


@_diff.register
def _(node: CayleyInv):
    w = node.arg
    return mul(div(Const(2), power(add(w, ONE), 2)), differentiate(w))


@_diff.register
def _(node: MobiusNode):
    m = node.mobius
    return div(Const(m.det), power(add(mul(Const(m.c), Z), Const(m.d)), 2))


@lru_cache(maxsize=4096)
def differentiate(expr: MapExpr) -> MapExpr:
    """Symbolic derivative d/dz."""
    return _diff(expr)


def derivative(expr: MapExpr, order: int) -> MapExpr:
    for _ in range(order):
        expr = differentiate(expr)
    return expr


# Printing

def format_constant(value: complex) -> str:
    re, im = value.real, value.imag
    if im == 0:
        return repr(re)
    if re == 0:
        return f"{repr(im)}i"
    sign = "+" if im >= 0 else "-"
    return f"({repr(re)}{sign}{repr(abs(im))}i)"


def _wrap(child: MapExpr, needed: int) -> str:
    text = to_text(child)
    return f"({text})" if child.precedence < needed else text


@singledispatch
def _text(node: MapExpr) -> str:
    raise TypeError(f"Cannot print node {type(node).__name__}")


@_text.register
def _(node: Var):
    return "z"


@_text.register
def _(node: Const):
    return format_constant(node.value)


@_text.register
def _(node: Add):
    return f"{_wrap(node.left, 1)} + {_wrap(node.right, 2)}"


@_text.register
def _(node: Sub):
    return f"{_wrap(node.left, 1)} - {_wrap(node.right, 2)}"


@_text.register
def _(node: Mul):
    return f"{_wrap(node.left, 2)}*{_wrap(node.right, 3)}"


@_text.register
def _(node: Div):
    return f"{_wrap(node.left, 2)}/{_wrap(node.right, 3)}"


@_text.register
def _(node: IntPow):
    return f"{_wrap(node.base, 4)}^{node.n}"


@_text.register
def _(node: Compose):
    return f"compose({to_text(node.outer)}, {to_text(node.inner)})"


@_text.register
def _(node: CayleyFwd):
    return f"cayley({to_text(node.arg)})"


@_text.register
def _(node: CayleyInv):
    return f"cayinv({to_text(node.arg)})"


@_text.register
def _(node: MobiusNode):
    m = node.mobius
    coeffs = ", ".join(format_constant(v) for v in (m.a, m.b, m.c, m.d))
    return f"mobius({coeffs})"


def to_text(expr: MapExpr) -> str:
    """Map-DSL text that parses back to an equal tree."""
    return _text(expr)


# Rational reduction

Rational = Tuple[Polynomial, Polynomial]


def _poly(*coeffs: complex) -> Polynomial:
    return Polynomial(np.array(coeffs, dtype=complex))


@singledispatch
def _rational(node: MapExpr) -> Rational:
    raise TypeError(f"No rational form for node {type(node).__name__}")


@_rational.register
def _(node: Var):
    return _poly(0, 1), _poly(1)


@_rational.register
def _(node: Const):
    return _poly(node.value), _poly(1)


@_rational.register
def _(node: Add):
    (p1, q1), (p2, q2) = to_rational(node.left), to_rational(node.right)
    return p1 * q2 + p2 * q1, q1 * q2


@_rational.register
def _(node: Sub):
    (p1, q1), (p2, q2) = to_rational(node.left), to_rational(node.right)
    return p1 * q2 - p2 * q1, q1 * q2


@_rational.register
def _(node: Mul):
    (p1, q1), (p2, q2) = to_rational(node.left), to_rational(node.right)
    return p1 * p2, q1 * q2


@_rational.register
def _(node: Div):
    (p1, q1), (p2, q2) = to_rational(node.left), to_rational(node.right)
    return p1 * q2, q1 * p2


@_rational.register
def _(node: IntPow):
    p, q = to_rational(node.base)
    return p**node.n, q**node.n


def _substitute(outer: Polynomial, p: Polynomial, q: Polynomial, degree: int) -> Polynomial:
    """q^degree * outer(p/q)."""
    total = _poly(0)
    for k, coeff in enumerate(outer.coef):
        total = total + coeff * p**k * q ** (degree - k)
    return total


@_rational.register
def _(node: Compose):
    po, qo = to_rational(node.outer)
    pi, qi = to_rational(node.inner)
    degree = max(po.degree(), qo.degree())
    return _substitute(po, pi, qi, degree), _substitute(qo, pi, qi, degree)


@_rational.register
def _(node: CayleyFwd):
    p, q = to_rational(node.arg)
    return q + p, q - p


@_rational.register
def _(node: CayleyInv):
    p, q = to_rational(node.arg)
    return p - q, p + q


@_rational.register
def _(node: MobiusNode):
    m = node.mobius
    return _poly(m.b, m.a), _poly(m.d, m.c)


def to_rational(expr: MapExpr) -> Rational:
    """(P, Q) with expr = P/Q; common factors are not cancelled."""
    return _rational(expr)
