# file: src/disk_rigidity/holomap.py
"""
Public operations on holomorphic maps: parsing, evaluation, symbolic
derivatives, boundary jets, Mobius recognition and self-map validation.
"""

import math
from typing import List, NamedTuple, Optional

import numpy as np

from . import config as app_config
from .exceptions import (
    BoundaryPoleError, DegenerateMobiusError, InputClassError, NonFiniteError, PoleError,
)
from .expressions import (
    MapExpr, MobiusNode, Var, derivative, differentiate, evaluate, to_rational, to_text,
)
from .logging_utils import logger
from .mobius import Mobius, cross_ratio
from .models import BoundaryJet, FixedPoint, SelfMapCheck
from .parser import parse_map
from .sampling import circle_points, disk_samples

__all__ = [
    "parse_map", "evaluate", "differentiate", "to_text", "to_rational", "boundary_jet",
    "mobius_fixed_points", "as_mobius", "detect_lft", "LftDetection", "validate_map",
    "validate_selfmap",
]

FIXED_TUPLE = (0.0, 0.5, 0.5j, -0.5)


class LftDetection(NamedTuple):
    is_lft: bool
    mobius: Optional[Mobius]
    deviation: float
    method: str


def boundary_jet(expr: MapExpr, tau: complex, m: int) -> BoundaryJet:
    """
    a_k = g^(k)(tau)/k! for k = 0..m by symbolic differentiation.

    Raises BoundaryPoleError when some derivative cannot be evaluated at tau;
    callers then fall back to series arithmetic or a numeric fit.
    """
    coeffs = []
    for k in range(m + 1):
        try:
            value = evaluate(derivative(expr, k), tau)
        except (PoleError, NonFiniteError) as e:
            raise BoundaryPoleError(f"Derivative {k} of {to_text(expr)} not evaluable at {tau}: {e}", tau)
        coeffs.append(value / math.factorial(k))
    return BoundaryJet(tau=complex(tau), coeffs=tuple(coeffs), method="symbolic")


def mobius_fixed_points(mobius: Mobius) -> List[FixedPoint]:
    return mobius.fixed_points()


def _trimmed(poly: np.polynomial.Polynomial) -> np.polynomial.Polynomial:
    scale = float(np.max(np.abs(poly.coef))) if poly.coef.size else 0.0
    return poly.trim(1e-14 * scale) if scale > 0 else poly


def as_mobius(expr: MapExpr) -> Optional[Mobius]:
    """Structural recognition: the tree reduces to (a z + b)/(c z + d) without cancellation."""
    if isinstance(expr, MobiusNode):
        return expr.mobius
    if isinstance(expr, Var):
        return Mobius.identity()
    try:
        p, q = (_trimmed(x) for x in to_rational(expr))
    except TypeError:
        return None
    if p.degree() > 1 or q.degree() > 1:
        return None
    pc = np.pad(p.coef, (0, 2 - p.coef.size))
    qc = np.pad(q.coef, (0, 2 - q.coef.size))
    try:
        return Mobius(pc[1], pc[0], qc[1], qc[0]).canonical()
    except DegenerateMobiusError:
        return None


def _probe_tuples(rng: np.random.Generator, count: int):
    yield np.array(FIXED_TUPLE, dtype=complex)
    for _ in range(count):
        yield disk_samples(4, rng=rng, r_max=0.9)


def detect_lft(expr: MapExpr, seed: int = app_config.SEED) -> LftDetection:
    """
    Decides whether expr is a linear fractional transformation: structural
    recognition first, then cross-ratio preservation on the fixed tuple and
    seeded random tuples, confirmed by a three-point fit on further probes.
    """
    mobius = as_mobius(expr)
    if mobius is not None:
        logger.debug(f"Structurally an LFT: {mobius}")
        return LftDetection(True, mobius, 0.0, "structural")

    rng = np.random.default_rng(seed)
    deviation = 0.0
    fit_points = None
    for points in _probe_tuples(rng, app_config.LFT_RANDOM_TUPLES):
        for _attempt in range(16):
            try:
                images = evaluate(expr, points)
                before = cross_ratio(*points)
                with np.errstate(all="ignore"):
                    after = cross_ratio(*images)
                break
            except (PoleError, NonFiniteError):
                points = disk_samples(4, rng=rng, r_max=0.9)
        else:
            raise PoleError(f"Could not draw pole-free probe points for {to_text(expr)}")
        if not np.isfinite(after):
            return LftDetection(False, None, math.inf, "cross-ratio")
        deviation = max(deviation, abs(after - before) / max(1.0, abs(before)))
        if fit_points is None:
            fit_points = (points[:3], images[:3])
    if deviation >= app_config.CROSS_RATIO_TOL:
        logger.debug(f"Cross-ratio deviation {deviation:.3e} rules out an LFT")
        return LftDetection(False, None, deviation, "cross-ratio")

    try:
        fitted = Mobius.three_point(*fit_points)
    except DegenerateMobiusError:
        return LftDetection(False, None, deviation, "fit")
    probes = disk_samples(app_config.LFT_FIT_PROBES, rng=rng, r_max=0.9)
    mismatch = float(np.max(np.abs(fitted(probes) - evaluate(expr, probes))))
    if mismatch >= app_config.LFT_FIT_TOL:
        logger.debug(f"Fitted transformation misses by {mismatch:.3e}")
        return LftDetection(False, None, max(deviation, mismatch), "fit")
    return LftDetection(True, fitted, deviation, "fit")


def validate_map(expr: MapExpr) -> None:
    """Rejects maps with an uncancelled pole strictly inside the disk."""
    p, q = (_trimmed(x) for x in to_rational(expr))
    if q.degree() < 1:
        return
    p_scale = max(1.0, float(np.max(np.abs(p.coef))))
    for root in q.roots():
        if abs(root) < 1 - 1e-9 and abs(p(root)) > 1e-8 * p_scale:
            raise InputClassError(f"{to_text(expr)} has a pole inside the disk", complex(root))


def validate_selfmap(expr: MapExpr, n: int = app_config.BOUNDARY_SAMPLES) -> SelfMapCheck:
    """
    Sampled maximum-principle test: |F| <= 1 + 1e-12 at n boundary midpoints.
    Only meaningful for maps analytic on the closed disk.
    """
    validate_map(expr)
    points = circle_points(n)
    try:
        values = np.abs(evaluate(expr, points))
    except (PoleError, NonFiniteError) as e:
        witness = e.point if isinstance(e, PoleError) and e.point is not None else 1.0
        return SelfMapCheck(False, math.inf, complex(witness))
    worst = int(np.argmax(values))
    max_modulus = float(values[worst])
    ok = max_modulus <= 1 + 1e-12
    logger.debug(f"max |F| on {n} boundary samples: {max_modulus:.15f}")
    return SelfMapCheck(ok, max_modulus, complex(points[worst]))
