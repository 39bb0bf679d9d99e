# file: src/disk_rigidity/boundary.py
"""
Boundary behaviour of maps at a point of the unit circle: angular limits by
Richardson extrapolation along a radial ladder, boundary jets, charges of
maps into the right half-plane and the pointwise lower/upper bounds built on
them.
"""

from typing import Callable, Optional, Sequence, Union

import numpy as np

from . import config as app_config
from .exceptions import (
    BoundaryPoleError, DivergentLimitError, IllConditionedFitError, InputClassError,
    NonFiniteError, PoleError,
)
from .expressions import ONE, Z, Const, MapExpr, evaluate, mul, sub, to_text
from .holomap import boundary_jet
from .jets import taylor_jet
from .logging_utils import log_note, logger
from .models import (
    AngularLimit, BoundaryJet, ChargeResult, HalfPlaneDecomposition, JuliaBoundReport,
    ReciprocalBoundReport, StolzProbe,
)
from .sampling import disk_samples, interior_grid, validation_grid

MapLike = Union[MapExpr, Callable[[np.ndarray], np.ndarray]]


def _values(f: MapLike, points: np.ndarray) -> np.ndarray:
    if isinstance(f, MapExpr):
        return evaluate(f, points)
    with np.errstate(all="ignore"):
        values = np.asarray(f(points), dtype=complex)
    if not np.all(np.isfinite(values)):
        raise NonFiniteError("Non-finite value of a black-box map on the probe ladder")
    return values


def _name(f: MapLike) -> str:
    return to_text(f) if isinstance(f, MapExpr) else getattr(f, "__name__", "map")


def require_nonnegative_real_part(p: MapLike, what: str = "p") -> None:
    """Falsification-only check of Re p >= 0 on the validation grid and rim."""
    grid = validation_grid()
    real = _values(p, grid).real
    worst = int(np.argmin(real))
    if real[worst] < -app_config.SIGN_TOL:
        raise InputClassError(
            f"Re {what} = {real[worst]:.3e} < 0 for {what} = {_name(p)}", complex(grid[worst])
        )


def richardson(values: np.ndarray, order: int = app_config.RICHARDSON_ORDER) -> np.ndarray:
    """Eliminates h, h^2, .., h^order from values sampled at h_j = 2^-j."""
    table = np.asarray(values, dtype=complex)
    for p in range(1, order + 1):
        table = (2**p * table[1:] - table[:-1]) / (2**p - 1)
    return table


def first_settled(extrapolants: np.ndarray, tol: float):
    """First index where two successive differences fall below tol (relative to max(1, |value|))."""
    diffs = np.abs(np.diff(extrapolants))
    for i in range(diffs.size - 1):
        scale = max(1.0, abs(extrapolants[i + 2]))
        if diffs[i] < tol * scale and diffs[i + 1] < tol * scale:
            return i + 2, float(diffs[i + 1])
    return None, None


def _limit_along(f: MapLike, probe: StolzProbe, direction: int, tol: float):
    try:
        raw = _values(f, probe.points(direction))
    except (PoleError, NonFiniteError) as e:
        raise DivergentLimitError(f"{_name(f)} not evaluable on the ladder toward {probe.tau}: {e}")
    extrapolants = richardson(raw)
    index, error = first_settled(extrapolants, tol)
    if index is None:
        raise DivergentLimitError(f"No limit of {_name(f)} at {probe.tau}: extrapolants did not settle")
    rung = probe.ladder_min + app_config.RICHARDSON_ORDER + index
    return complex(extrapolants[index]), rung, error


def angular_limit(f: MapLike, probe: Optional[StolzProbe] = None,
                  tol: float = app_config.LIMIT_AGREEMENT) -> AngularLimit:
    """
    Limit of f at probe.tau along the radius, cross-checked along two rays
    tilted into the Stolz angle. A ray that disagrees beyond 1e-6 or diverges
    marks the limit as not nontangential.
    """
    probe = probe or StolzProbe()
    value, rung, error = _limit_along(f, probe, 0, tol)
    ray_values = []
    nontangential = True
    for direction in (-1, 1):
        try:
            ray_value, _, _ = _limit_along(f, probe, direction, tol)
        except DivergentLimitError:
            nontangential = False
            continue
        ray_values.append(ray_value)
        if abs(ray_value - value) > app_config.RAY_AGREEMENT * max(1.0, abs(value)):
            nontangential = False
    if not nontangential:
        log_note(logger, f"Limit of {_name(f)} at {probe.tau} is not nontangential")
    logger.debug(f"Angular limit of {_name(f)} at {probe.tau}: {value} (rung {rung})")
    return AngularLimit(value=value, rung=rung, error=error, ray_values=tuple(ray_values),
                        nontangential=nontangential)


def numeric_jet(f: MapLike, tau: complex = 1.0, m: int = 3,
                probe: Optional[StolzProbe] = None) -> BoundaryJet:
    """
    Least-squares fit of a_0..a_m against powers of (z - tau) on the radial
    ladder, followed by the residual test: |f - sum a_k (z-tau)^k| / |z-tau|^m
    must decrease over the last rungs and end below 1e-4.
    """
    if m > 3:
        raise ValueError("numeric_jet supports m <= 3")
    probe = probe or StolzProbe(tau=tau)
    top = min(probe.ladder_max, app_config.FIT_LADDER_MAX)
    j = np.arange(probe.ladder_min, top + 1)
    degree = m + 3
    if j.size < degree + 1 + app_config.RESIDUAL_RUNGS:
        raise IllConditionedFitError(f"Ladder of {j.size} rungs too short for a degree {degree} fit")
    h = 2.0 ** -j.astype(float)
    points = tau * (1.0 - h)
    try:
        values = _values(f, points)
    except (PoleError, NonFiniteError) as e:
        raise IllConditionedFitError(f"{_name(f)} not evaluable on the ladder: {e}")

    h_max = h[0]
    x = h / h_max
    vander = np.polynomial.polynomial.polyvander(x, degree)
    coeffs, _, rank, _ = np.linalg.lstsq(vander, values, rcond=None)
    if rank < degree + 1:
        raise IllConditionedFitError(f"Rank-deficient jet fit (rank {rank} < {degree + 1})")
    a = np.array([coeffs[k] / ((-tau) ** k * h_max**k) for k in range(m + 1)])

    w = points - tau
    approx = sum(a[k] * w**k for k in range(m + 1))
    floor = 1e-12 * np.maximum(1.0, np.abs(values))
    residual = np.maximum(np.abs(values - approx) - floor, 0.0)
    ratio = residual / np.abs(w) ** m
    tail = ratio[-app_config.RESIDUAL_RUNGS:]
    monotone = bool(np.all(np.diff(tail) <= 1e-12 + 1e-9 * tail[:-1]))
    residual_ok = monotone and tail[-1] < app_config.RESIDUAL_RATIO_MAX
    if not residual_ok:
        log_note(logger, f"Residual test failed for the numeric jet of {_name(f)} at {tau}")
    return BoundaryJet(tau=complex(tau), coeffs=tuple(a), residual_ok=residual_ok, method="numeric")


def jet_at(f: MapLike, tau: complex = 1.0, m: int = 3) -> BoundaryJet:
    """Boundary jet by the first route that works: symbolic, series arithmetic, least squares."""
    if not isinstance(f, MapExpr):
        return numeric_jet(f, tau, m)
    try:
        return boundary_jet(f, tau, m)
    except BoundaryPoleError:
        logger.debug(f"Symbolic jet of {_name(f)} unavailable at {tau}; using series arithmetic")
    try:
        return taylor_jet(f, tau, m)
    except IllConditionedFitError:
        log_note(logger, f"Series jet of {_name(f)} truncated at {tau}; falling back to a numeric fit")
    return numeric_jet(f, tau, m)


def charge(p: MapLike, tau: complex = 1.0, jet_tol: float = app_config.JET_TOL) -> ChargeResult:
    """delta_p(tau) = angular limit of (1 - z conj(tau)) p(z), clamped at 0 within 1e-9."""
    require_nonnegative_real_part(p)
    if isinstance(p, MapExpr):
        weighted = mul(sub(ONE, mul(Const(np.conj(tau)), Z)), p)
    else:
        weighted = lambda z: (1 - z * np.conj(tau)) * p(z)
    limit = angular_limit(weighted, StolzProbe(tau=tau))
    delta = limit.value.real
    if abs(limit.value.imag) > jet_tol * max(1.0, abs(delta)):
        log_note(logger, f"Charge limit has imaginary part {limit.value.imag:.3e}")
    if -app_config.SIGN_TOL <= delta < 0:
        delta = 0.0
    converged = delta >= 0
    return ChargeResult(delta=delta, converged=converged, tail_estimate=limit.error)


def julia_bound_check(p: MapLike, n_samples: int = app_config.BOUND_SAMPLES,
                      seed: int = app_config.SEED) -> JuliaBoundReport:
    """Re p(z) >= delta/2 * (1 - |z|^2)/|1 - z|^2 at seeded disk points."""
    delta = charge(p, 1.0).delta
    z = disk_samples(n_samples, seed)
    lhs = _values(p, z).real
    rhs = 0.5 * delta * (1 - np.abs(z) ** 2) / np.abs(1 - z) ** 2
    slack = lhs - rhs
    tolerance = app_config.SIGN_TOL * np.maximum(1.0, np.abs(rhs))
    worst = int(np.argmin(slack + tolerance))
    ok = bool(slack[worst] + tolerance[worst] >= 0)
    return JuliaBoundReport(
        delta=delta,
        min_slack=float(np.min(slack)),
        ok=ok,
        counterexample=None if ok else complex(z[worst]),
    )


def _first_violation(slack: np.ndarray, tolerance: np.ndarray) -> Optional[int]:
    bad = np.nonzero(slack < -tolerance)[0]
    return int(bad[0]) if bad.size else None


def reciprocal_bound_check(q: MapLike, n_samples: int = app_config.BOUND_SAMPLES,
                           seed: int = app_config.SEED,
                           probes: Sequence[complex] = (0.5, 0.0),
                           jet_tol: float = app_config.JET_TOL) -> ReciprocalBoundReport:
    """
    For Re q >= 0 with q -> 0 at 1 and k = q'(1) <= 0, checks
    |q|^2 <= -2k |1-z|^2/(1-|z|^2) Re q (certified) and the same bound with
    factor 1 (printed). Probe points are checked before the seeded samples, so
    the first violating probe is the printed witness.
    """
    require_nonnegative_real_part(q, "q")
    z = np.concatenate([np.asarray(probes, dtype=complex), disk_samples(n_samples, seed)])
    values = _values(q, z)

    if np.max(np.abs(values)) <= 1e-14:
        logger.debug("q vanishes identically on the samples")
        return ReciprocalBoundReport(k=0.0, certified_ok=True, printed_ok=True,
                                     certified_min_slack=0.0, printed_min_slack=0.0,
                                     identically_zero=True)

    limit = angular_limit(q)
    if abs(limit.value) > jet_tol:
        raise InputClassError(f"q(1) = {limit.value:.3e} must vanish")
    k_complex = jet_at(q, 1.0, 1).coeffs[1]
    if abs(k_complex.imag) > jet_tol:
        raise InputClassError(f"q'(1) = {k_complex:.6g} is not real")
    k = k_complex.real
    if k > jet_tol:
        raise InputClassError(f"q'(1) = {k:.6g} is positive")

    lhs = np.abs(values) ** 2
    weight = -k * np.abs(1 - z) ** 2 / (1 - np.abs(z) ** 2) * values.real
    tolerance = app_config.SIGN_TOL * np.maximum(1.0, lhs)

    certified_slack = 2 * weight - lhs
    printed_slack = weight - lhs
    certified_bad = _first_violation(certified_slack, tolerance)
    printed_bad = _first_violation(printed_slack, tolerance)

    report = ReciprocalBoundReport(
        k=k,
        certified_ok=certified_bad is None,
        printed_ok=printed_bad is None,
        certified_min_slack=float(np.min(certified_slack)),
        printed_min_slack=float(np.min(printed_slack)),
        printed_witness=None if printed_bad is None else complex(z[printed_bad]),
        printed_lhs=None if printed_bad is None else float(lhs[printed_bad]),
        printed_rhs=None if printed_bad is None else float(weight[printed_bad]),
        certified_witness=None if certified_bad is None else complex(z[certified_bad]),
    )
    if not report.printed_ok:
        log_note(logger, f"Factor-1 form of the reciprocal bound fails at z = {report.printed_witness}: "
                         f"{report.printed_lhs:.6g} > {report.printed_rhs:.6g}")
    return report


def halfplane_decompose(p: MapExpr, jet_tol: float = app_config.JET_TOL) -> HalfPlaneDecomposition:
    """
    Splits p = a C + b + gamma at 1 from the jet of g = (1 - z) p:
    a = g_0/2, b = g_0/2 - g_1, and the residual class requires g_2 = 0.
    gamma vanishes identically iff Re p >= Re b on the disk.
    """
    require_nonnegative_real_part(p)
    g = mul(sub(ONE, Z), p)
    jet = jet_at(g, 1.0, 2)
    g0, g1, g2 = jet.coeffs
    scale = max(1.0, abs(g0), abs(g1))
    if abs(g2) > jet_tol * scale:
        raise InputClassError(
            f"p - aC - b does not vanish to second order at 1 (coefficient {g2:.3e})"
        )
    a = 0.5 * g0.real
    b = complex(0.5 * g0 - g1)
    delta = charge(p, 1.0, jet_tol).delta
    if abs(delta - 2 * a) > 1e-6 * max(1.0, delta):
        log_note(logger, f"Charge {delta:.10g} disagrees with jet coefficient 2a = {2 * a:.10g}")

    grid = interior_grid()
    gap = evaluate(p, grid).real - b.real
    worst = int(np.argmin(gap))
    gamma_zero = bool(gap[worst] >= -app_config.SIGN_TOL)
    return HalfPlaneDecomposition(
        a=a, b=b, gamma_zero=gamma_zero,
        witness=None if gamma_zero else complex(grid[worst]),
        residual=float(abs(g2)),
    )
