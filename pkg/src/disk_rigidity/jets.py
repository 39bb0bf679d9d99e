# file: src/disk_rigidity/jets.py
"""
Taylor-mode jets of expression trees.

Each node maps a truncated Laurent series in (z - tau) to another one, so the
jet of a composite map is obtained by propagating the series of z through the
tree. Division strips leading coefficients that vanish to working precision,
which resolves removable singularities at tau such as (1 - z)^2 * C(F(z)) at
a fixed point of F.
"""

from functools import singledispatch
from typing import Optional

import numpy as np

from .exceptions import BoundaryPoleError, IllConditionedFitError, PoleError
from .expressions import (
    Add, CayleyFwd, CayleyInv, Compose, Const, Div, IntPow, MapExpr, MobiusNode, Mul, Sub, Var,
)
from .logging_utils import logger
from .models import BoundaryJet

NEGLIGIBLE = 1e-12
EXTRA_TERMS = 8


class Series:
    """sum_k coeffs[k] (z - tau)^(valuation + k), exact through power ``top``."""

    __slots__ = ("coeffs", "valuation")

    def __init__(self, coeffs, valuation: int = 0):
        self.coeffs = np.asarray(coeffs, dtype=complex)
        self.valuation = valuation
        if self.coeffs.size == 0:
            raise IllConditionedFitError("Series truncated to zero known terms.")

    @classmethod
    def constant(cls, value: complex, length: int) -> "Series":
        coeffs = np.zeros(length, dtype=complex)
        coeffs[0] = value
        return cls(coeffs)

    @classmethod
    def variable(cls, tau: complex, length: int) -> "Series":
        coeffs = np.zeros(length, dtype=complex)
        coeffs[0] = tau
        coeffs[1] = 1.0
        return cls(coeffs)

    @property
    def top(self) -> int:
        return self.valuation + self.coeffs.size - 1

    def window(self, low: int, high: int) -> np.ndarray:
        out = np.zeros(high - low + 1, dtype=complex)
        for e in range(max(low, self.valuation), min(high, self.top) + 1):
            out[e - low] = self.coeffs[e - self.valuation]
        return out

    def normalized(self) -> "Series":
        """Drops leading coefficients that are negligible against the largest one."""
        scale = float(np.max(np.abs(self.coeffs)))
        if scale == 0.0:
            return self
        start = 0
        while start < self.coeffs.size - 1 and abs(self.coeffs[start]) <= NEGLIGIBLE * scale:
            start += 1
        return Series(self.coeffs[start:], self.valuation + start)

    def __add__(self, other: "Series") -> "Series":
        low = min(self.valuation, other.valuation)
        high = min(self.top, other.top)
        return Series(self.window(low, high) + other.window(low, high), low)

    def __neg__(self) -> "Series":
        return Series(-self.coeffs, self.valuation)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        length = min(self.coeffs.size, other.coeffs.size)
        product = np.convolve(self.coeffs[:length], other.coeffs[:length])[:length]
        return Series(product, self.valuation + other.valuation)

    def scale(self, factor: complex) -> "Series":
        return Series(self.coeffs * factor, self.valuation)

    def reciprocal(self) -> "Series":
        s = self.normalized()
        lead = s.coeffs[0]
        if lead == 0:
            raise PoleError("Reciprocal of an identically vanishing series.")
        c = s.coeffs
        r = np.zeros_like(c)
        r[0] = 1.0 / lead
        for k in range(1, c.size):
            r[k] = -np.dot(c[1:k + 1], r[k - 1::-1][:k]) / lead
        return Series(r, -s.valuation)

    def __truediv__(self, other: "Series") -> "Series":
        return self * other.reciprocal()

    def __pow__(self, n: int) -> "Series":
        result = Series.constant(1.0, self.coeffs.size)
        for _ in range(n):
            result = result * self
        return result


@singledispatch
def _series(node: MapExpr, z: Series) -> Series:
    raise TypeError(f"No series rule for node {type(node).__name__}")


@_series.register
def _(node: Var, z):
    return z


@_series.register
def _(node: Const, z):
    return Series.constant(node.value, z.coeffs.size)


@_series.register
def _(node: Add, z):
    return _series(node.left, z) + _series(node.right, z)


@_series.register
def _(node: Sub, z):
    return _series(node.left, z) - _series(node.right, z)


@_series.register
def _(node: Mul, z):
    return _series(node.left, z) * _series(node.right, z)


@_series.register
def _(node: Div, z):
    return _series(node.left, z) / _series(node.right, z)


@_series.register
def _(node: IntPow, z):
    return _series(node.base, z) ** node.n


@_series.register
def _(node: Compose, z):
    return _series(node.outer, _series(node.inner, z))


def _one_like(s: Series) -> Series:
    return Series.constant(1.0, s.top + 1)


@_series.register
def _(node: CayleyFwd, z):
    w = _series(node.arg, z)
    one = _one_like(w)
    return (one + w) / (one - w)


@_series.register
def _(node: CayleyInv, z):
    w = _series(node.arg, z)
    one = _one_like(w)
    return (w - one) / (w + one)


@_series.register
def _(node: MobiusNode, z):
    m = node.mobius
    one = _one_like(z)
    return (z.scale(m.a) + one.scale(m.b)) / (z.scale(m.c) + one.scale(m.d))


def series_at(expr: MapExpr, tau: complex, length: int) -> Series:
    return _series(expr, Series.variable(complex(tau), length)).normalized()


def taylor_jet(expr: MapExpr, tau: complex, m: int, extra: Optional[int] = None) -> BoundaryJet:
    """
    Jet a_0..a_m of expr at tau by truncated series arithmetic.

    Raises BoundaryPoleError when expr has a genuine pole at tau.
    """
    length = m + 1 + (EXTRA_TERMS if extra is None else extra)
    try:
        s = series_at(expr, tau, length)
    except PoleError as e:
        raise BoundaryPoleError(f"Series arithmetic failed at {tau}: {e}", tau)
    if s.valuation < 0:
        raise BoundaryPoleError(f"Pole of order {-s.valuation} at {tau}", tau)
    if s.top < m:
        raise IllConditionedFitError(
            f"Only powers up to {s.top} known at {tau}; increase the working length."
        )
    coeffs = s.window(0, m)
    logger.debug(f"Series jet at {tau}: {np.round(coeffs, 12)}")
    return BoundaryJet(tau=complex(tau), coeffs=tuple(coeffs), residual_ok=True, method="taylor")
