# file: src/disk_rigidity/mobius.py
"""Linear fractional transformations z -> (az + b)/(cz + d)."""

import cmath
from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np

from . import config as app_config
from .exceptions import DegenerateMobiusError, IdentityMobiusError, PoleError
from .models import FixedPoint

Value = Union[complex, np.ndarray]


def cross_ratio(z1: Value, z2: Value, z3: Value, z4: Value) -> Value:
    """(z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3)); invariant under every LFT."""
    return (z1 - z3) * (z2 - z4) / ((z1 - z4) * (z2 - z3))


@dataclass(frozen=True)
class Mobius:
    """Projective coefficient record; equality of maps is tested on canonical forms."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        scale = max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))
        if scale == 0 or abs(self.det) / scale**2 <= app_config.DET_MIN:
            raise DegenerateMobiusError(
                f"Degenerate transformation ({self.a}, {self.b}, {self.c}, {self.d}): ad - bc = 0."
            )

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "Mobius":
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @classmethod
    def three_point(cls, p: Sequence[complex], q: Sequence[complex]) -> "Mobius":
        """Transformation sending p[0], p[1], p[2] to q[0], q[1], q[2]."""
        (p1, p2, p3), (q1, q2, q3) = p, q
        a = np.linalg.det(np.array(((p1 * q1, q1, 1), (p2 * q2, q2, 1), (p3 * q3, q3, 1))))
        b = np.linalg.det(np.array(((p1 * q1, p1, q1), (p2 * q2, p2, q2), (p3 * q3, p3, q3))))
        c = np.linalg.det(np.array(((p1, q1, 1), (p2, q2, 1), (p3, q3, 1))))
        d = np.linalg.det(np.array(((p1 * q1, p1, 1), (p2 * q2, p2, 1), (p3 * q3, p3, 1))))
        return cls(a, b, c, d).canonical()

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def canonical(self) -> "Mobius":
        """Scaled so that the first entry of largest magnitude equals 1."""
        entries = (self.a, self.b, self.c, self.d)
        pivot = max(entries, key=abs)
        return Mobius(*(e / pivot for e in entries))

    def __call__(self, z: Value) -> Value:
        den = self.c * z + self.d
        if np.any(den == 0):
            raise PoleError(f"Pole of {self} hit at z = {-self.d / self.c}", -self.d / self.c)
        return (self.a * z + self.b) / den

    def __matmul__(self, other: "Mobius") -> "Mobius":
        return Mobius.from_matrix(self.matrix @ other.matrix)

    def compose(self, other: "Mobius") -> "Mobius":
        """self o other."""
        return self @ other

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def derivative(self, z: Value, order: int = 1) -> Value:
        """Derivatives of order 1..3 from d^n/dz^n (az+b)/(cz+d)."""
        den = self.c * z + self.d
        if order == 1:
            return self.det / den**2
        if order == 2:
            return -2 * self.c * self.det / den**3
        if order == 3:
            return 6 * self.c**2 * self.det / den**4
        raise ValueError(f"Unsupported derivative order {order}.")

    def isclose(self, other: "Mobius", tol: float = 1e-12) -> bool:
        m1 = self.canonical().matrix
        m2 = other.canonical().matrix
        return bool(np.all(np.abs(m1 - m2) <= tol))

    def is_identity(self, tol: float = 1e-12) -> bool:
        return self.isclose(Mobius.identity(), tol)

    def fixed_points(self) -> List[FixedPoint]:
        """
        Finite fixed points, roots of c z^2 + (d - a) z - b. A double root comes
        back once with multiplicity 2; the point at infinity is never reported.
        """
        if self.is_identity():
            raise IdentityMobiusError("The identity fixes every point.")
        m = self.canonical()
        shift = m.d - m.a
        if abs(m.c) <= 1e-14:
            if abs(shift) <= 1e-14:
                return []
            return [FixedPoint(m.b / shift)]
        disc = shift**2 + 4 * m.b * m.c
        if abs(disc) <= 1e-13 * max(1.0, abs(shift) ** 2, abs(m.b * m.c)):
            return [FixedPoint(-shift / (2 * m.c), 2)]
        root = cmath.sqrt(disc)
        # larger of -shift +/- root keeps the quotient well conditioned
        q = -0.5 * (shift + root) if abs(shift + root) >= abs(shift - root) else -0.5 * (shift - root)
        return [FixedPoint(q / m.c), FixedPoint(-m.b / q)]

    def __str__(self) -> str:
        return f"Mobius({self.a:.6g}, {self.b:.6g}, {self.c:.6g}, {self.d:.6g})"


CAYLEY = Mobius(1, 1, -1, 1)
CAYLEY_INV = Mobius(1, -1, 1, 1)
