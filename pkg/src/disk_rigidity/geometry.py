# file: src/disk_rigidity/geometry.py
"""
Horocycles and pseudo-hyperbolic disks D(tau, k).

D(tau, k) = {z in the disk : |1 - z conj(tau)|^2 / (1 - |z|^2) < k}. Every
region is a Euclidean disk, so comparisons between regions go through
centers and radii; inclusion of an image F(src) in dst is tested on samples.
"""

import math
from typing import Optional, Sequence, Union

import numpy as np

from . import config as app_config
from .exceptions import PreconditionError, RegionError
from .expressions import MapExpr, evaluate
from .logging_utils import logger
from .mobius import Mobius
from .models import DiskRegion, EuclideanForm, InclusionAudit, InclusionVerdict, Membership
from .sampling import boundary_angles, disk_samples

MapLike = Union[MapExpr, Mobius]


def ratio(region: DiskRegion, z) -> np.ndarray:
    """|1 - z conj(tau)|^2 / (1 - |z|^2); +inf outside the open disk."""
    z = np.asarray(z, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        value = np.abs(1 - z * np.conj(region.tau)) ** 2 / (1 - np.abs(z) ** 2)
    return np.where(np.abs(z) < 1, value, np.inf)


def margins(region: DiskRegion, z) -> np.ndarray:
    """k minus the defining ratio; -inf for points off the open disk."""
    z = np.asarray(z, dtype=complex)
    if region.is_whole_disk:
        return np.where(np.abs(z) < 1, np.inf, -np.inf)
    return region.k - ratio(region, z)


def contains(region: DiskRegion, z: complex) -> Membership:
    if abs(z) >= 1:
        raise RegionError(f"Point {z} is not in the open unit disk.")
    margin = float(margins(region, z))
    return Membership(margin > 0, margin)


def euclidean_form(region: DiskRegion) -> EuclideanForm:
    """Center and radius of the region as a Euclidean disk."""
    if region.is_whole_disk:
        return EuclideanForm(0j, 1.0)
    tau, k = region.tau, region.k
    if region.is_horocycle:
        return EuclideanForm(tau / (1 + k), k / (1 + k))
    s = abs(tau) ** 2
    r = math.sqrt(1 - (1 - s) / k)
    denominator = 1 - s * r**2
    return EuclideanForm(tau * (1 - r**2) / denominator, r * (1 - s) / denominator, r)


def region_contains(inner: DiskRegion, outer: DiskRegion, tol: float = 1e-10) -> bool:
    a, b = euclidean_form(inner), euclidean_form(outer)
    return abs(a.center - b.center) + a.radius <= b.radius + tol


def regions_equal(first: DiskRegion, second: DiskRegion, tol: float = 1e-10) -> bool:
    a, b = euclidean_form(first), euclidean_form(second)
    return abs(a.center - b.center) <= tol and abs(a.radius - b.radius) <= tol


def _tangency_angle(region: DiskRegion) -> Optional[float]:
    if region.is_whole_disk or region.is_horocycle:
        return float(np.angle(region.tau))
    return None


def boundary_samples(region: DiskRegion, n: int) -> np.ndarray:
    """n midpoint samples of the region's boundary circle, minus the arc at the tangency point."""
    form = euclidean_form(region)
    tangency = _tangency_angle(region)
    if tangency is None:
        theta = boundary_angles(n)
    else:
        theta = boundary_angles(n, app_config.TANGENCY_ARC, tangency)
    return form.center + form.radius * np.exp(1j * theta)


def interior_samples(region: DiskRegion, n: int, seed: int = app_config.SEED) -> np.ndarray:
    form = euclidean_form(region)
    return form.center + form.radius * disk_samples(n, seed, r_max=0.999)


def _images(F: MapLike, z: np.ndarray) -> np.ndarray:
    return F(z) if isinstance(F, Mobius) else evaluate(F, z)


def image_in_region(F: MapLike, src: DiskRegion, dst: DiskRegion,
                    n: int = app_config.INCLUSION_SAMPLES, probes: Sequence[complex] = (),
                    seed: int = app_config.SEED) -> InclusionVerdict:
    """
    Tests F(src) inside dst on the probes, then n boundary and n/4 interior
    samples of src. The tolerance on each margin grows with the conditioning
    of the ratio near the unit circle. The witness is the first violating
    point; the point with the largest ratio is reported as ``worst``.
    """
    z = np.concatenate([
        np.asarray(probes, dtype=complex),
        boundary_samples(src, n),
        interior_samples(src, max(1, n // 4), seed),
    ])
    w = _images(F, z)
    margin = margins(dst, w)
    values = ratio(dst, w)
    with np.errstate(invalid="ignore", divide="ignore"):
        conditioning = 16 * np.finfo(float).eps * values / (1 - np.abs(w) ** 2)
    inside = np.abs(w) < 1
    tolerance = app_config.INCLUSION_MARGIN + np.where(inside, conditioning, 0.0)
    violating = np.nonzero(~inside | (margin < -tolerance))[0]
    worst = int(np.argmax(values))
    verdict = InclusionVerdict(
        ok=violating.size == 0,
        min_margin=float(np.min(margin)),
        witness=complex(z[violating[0]]) if violating.size else None,
        witness_ratio=float(values[violating[0]]) if violating.size else None,
        worst=complex(z[worst]),
        worst_ratio=float(values[worst]),
        n_checked=int(z.size),
    )
    logger.debug(f"F({src}) in {dst}: ok={verdict.ok}, min margin {verdict.min_margin:.3e}")
    return verdict


def boundary_jet_at_one(M: Mobius):
    """(alpha, F''(1)) of a transformation fixing 1."""
    if abs(M(1.0) - 1.0) > 1e-10:
        raise PreconditionError(f"{M} does not fix 1.")
    alpha = M.derivative(1.0, 1)
    if abs(alpha.imag) > 1e-10 or alpha.real <= 0:
        raise PreconditionError(f"M'(1) = {alpha} is not a positive real number.")
    return alpha.real, M.derivative(1.0, 2)


def horocycle_image_parameter(alpha: float, f2: complex, k: float) -> float:
    """alpha k/(1 + alpha k Re a) with a = (F''(1) + alpha(1 - alpha))/alpha^2; k = inf gives 1/Re a."""
    re_a = ((f2 + alpha * (1 - alpha)) / alpha**2).real
    if math.isinf(k):
        return math.inf if re_a <= 0 else 1.0 / re_a
    denominator = 1 + alpha * k * re_a
    if denominator <= 1e-9:
        raise RegionError(f"Image is not a horocycle of this family (1 + alpha k Re a = {denominator:.3e}).")
    return alpha * k / denominator


def lft_region_image(M: Mobius, k: float) -> DiskRegion:
    """Exact image of D(1, k) under a transformation fixing 1; k = inf stands for the disk."""
    alpha, f2 = boundary_jet_at_one(M)
    k_image = horocycle_image_parameter(alpha, f2, k)
    if math.isinf(k_image):
        return DiskRegion.whole_disk()
    return DiskRegion(1.0, k_image)


def _distance_to_circle(points: np.ndarray, form: EuclideanForm) -> np.ndarray:
    return np.abs(np.abs(points - form.center) - form.radius)


def boundary_deviation(F: MapLike, src: DiskRegion, dst: DiskRegion,
                       n: int = app_config.INCLUSION_SAMPLES,
                       inverse: Optional[MapLike] = None) -> float:
    """
    Largest distance from F(boundary of src) to the boundary of dst and, when
    an inverse is given, from inverse(boundary of dst) to the boundary of src.
    """
    forward = _distance_to_circle(_images(F, boundary_samples(src, n)), euclidean_form(dst))
    deviation = float(np.max(forward))
    if inverse is not None:
        backward = _distance_to_circle(_images(inverse, boundary_samples(dst, n)), euclidean_form(src))
        deviation = max(deviation, float(np.max(backward)))
    return deviation


def inclusion_audit(alpha: float, f2: complex, k: float, tol: float = 1e-9) -> InclusionAudit:
    """
    Compares D(1, alpha k/(1 + alpha k Re a)) with D(1, k/(1 + (k+1) Re a_lambda)),
    a_lambda = (lambda F''(1) + alpha(1 - alpha))/alpha^2 and lambda = k/(k+1).
    """
    lam = k / (k + 1)
    k_image = horocycle_image_parameter(alpha, f2, k)
    re_a_lambda = ((lam * f2 + alpha * (1 - alpha)) / alpha**2).real
    k_bound = k / (1 + (k + 1) * re_a_lambda)
    image, bound = DiskRegion(1.0, k_image), DiskRegion(1.0, k_bound)
    return InclusionAudit(
        alpha=alpha, f2=complex(f2), k=k, k_image=k_image, k_bound=k_bound,
        contained=region_contains(image, bound),
        equal=regions_equal(image, bound, tol),
    )
