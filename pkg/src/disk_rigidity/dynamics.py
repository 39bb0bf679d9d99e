# file: src/disk_rigidity/dynamics.py
"""
Discrete and continuous dynamics on the disk: Denjoy-Wolff classification of
self-maps, flows of infinitesimal generators (u' = -f(u)) by an embedded
Cash-Karp pair, Berkson-Porta factors and null-point profiles.
"""

import csv
import io
import math
from typing import Iterable, List, NamedTuple, Optional, Sequence

import numpy as np

from . import config as app_config
from .boundary import angular_limit, first_settled, jet_at, richardson
from .exceptions import (
    DivergentLimitError, IntegrationError, InputClassError, NotAGeneratorError, NotDivisibleError,
    PoleError, PreconditionError, StepUnderflowError, UndeterminedClassificationError,
)
from .expressions import (
    ONE, Z, CayleyFwd, Const, MapExpr, differentiate, div, evaluate, mul, neg, power, sub,
    to_rational, to_text,
)
from .holomap import as_mobius, validate_selfmap
from .logging_utils import log_note, log_step, logger
from .models import (
    Classification, ClassificationKind, GeneratorProfile, RateReport, StolzProbe,
    Trajectory,
)
from .sampling import circle_points, disk_samples, interior_grid, validation_grid

# Cash-Karp 5(4) tableau; the right-hand side is autonomous, so stage times are not needed
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (3 / 10, -9 / 10, 6 / 5),
    (-11 / 54, 5 / 2, -70 / 27, 35 / 27),
    (1631 / 55296, 175 / 512, 575 / 13824, 44275 / 110592, 253 / 4096),
)
_B5 = (37 / 378, 0.0, 250 / 621, 125 / 594, 0.0, 512 / 1771)
# difference of the 5th and embedded 4th order weights
_TR = (-277 / 64512, 0.0, 6925 / 370944, -6925 / 202752, -277 / 14336, 277 / 7084)


class BerksonPorta(NamedTuple):
    tau: complex
    p: MapExpr
    is_generator: bool
    witness: Optional[complex] = None
    profile: Optional[GeneratorProfile] = None


# Discrete iteration

def _is_identity(F: MapExpr) -> bool:
    probes = disk_samples(64, r_max=0.9)
    return float(np.max(np.abs(evaluate(F, probes) - probes))) < 1e-12


def _newton(g: MapExpr, dg: MapExpr, z: complex, steps: int = 60) -> complex:
    for _ in range(steps):
        try:
            slope = evaluate(dg, z)
            if slope == 0:
                break
            update = evaluate(g, z) / slope
        except PoleError:
            break
        z -= update
        if abs(update) < 1e-15:
            break
    return z


def interior_fixed_points(F: MapExpr) -> List[complex]:
    """Roots of P - z Q inside the disk, F = P/Q."""
    p, q = to_rational(F)
    poly = (p - np.polynomial.Polynomial([0, 1]) * q).trim(1e-14)
    if poly.degree() < 1:
        return []
    return [complex(r) for r in poly.roots() if abs(r) < 1 - 1e-9]


def _boundary_fixed_point(F: MapExpr, near: complex) -> complex:
    """Fixed point of F on the unit circle closest to ``near``: angular sweep, then Newton."""
    mobius = as_mobius(F)
    if mobius is not None and not mobius.is_identity():
        candidates = [fp.point for fp in mobius.fixed_points() if abs(abs(fp.point) - 1) < 1e-9]
        if candidates:
            return min(candidates, key=lambda c: abs(c - near))
    center = float(np.angle(near))
    theta = center + np.linspace(-0.05, 0.05, 2001)
    circle = np.exp(1j * theta)
    gap = np.abs(evaluate(F, circle) - circle)
    tau = complex(circle[int(np.argmin(gap))])
    g = sub(F, Z)
    tau = _newton(g, differentiate(g), tau)
    return tau / abs(tau)


def denjoy_wolff(F: MapExpr, z0: complex = 0j, tol: float = app_config.DW_TOL,
                 max_iterations: int = app_config.MAX_ITERATIONS,
                 jet_tol: float = app_config.JET_TOL) -> Classification:
    """
    Classifies a self-map by iterating from z0. An interior limit gives a
    dilation (or an elliptic automorphism when |F'| = 1 there); an orbit that
    accumulates at the circle gives the boundary Denjoy-Wolff point, whose
    multiplier F'(tau) separates hyperbolic from parabolic maps.
    """
    check = validate_selfmap(F)
    if not check.ok:
        raise InputClassError(f"{to_text(F)} is not a self-map of the disk (|F| = {check.max_modulus:.6g})",
                              check.witness)
    if _is_identity(F):
        return Classification(ClassificationKind.IDENTITY, 0j, 1 + 0j)

    dF = differentiate(F)
    z = complex(z0)
    converged = False
    n = 0
    for n in range(1, max_iterations + 1):
        z_next = evaluate(F, z)
        step = abs(z_next - z)
        z = z_next
        if step < tol:
            converged = True
            break
        if 1 - abs(z) < 1e-12:
            break
    logger.debug(f"Orbit of {z0} after {n} iterations: {z} (converged={converged})")

    if converged and 1 - abs(z) > 1e-6:
        tau = _newton(sub(F, Z), sub(dF, ONE), z)
        multiplier = evaluate(dF, tau)
        if abs(abs(multiplier) - 1) < app_config.ELLIPTIC_TOL:
            return Classification(ClassificationKind.ELLIPTIC_AUTOMORPHISM, tau, multiplier, n)
        return Classification(ClassificationKind.DILATION, tau, multiplier, n)

    if 1 - abs(z) < 1e-2:
        tau = _boundary_fixed_point(F, z)
        residual = abs(evaluate(F, tau) - tau)
        jet = jet_at(F, tau, 2)
        multiplier = jet.coeffs[1]
        details = {"fixed_point_residual": residual, "jet_method": jet.method}
        parabolic_tol = app_config.PARABOLIC_TOL
        if as_mobius(F) is None:
            parabolic_tol += math.sqrt(residual)
        if abs(multiplier - 1) < parabolic_tol:
            return Classification(ClassificationKind.PARABOLIC, tau, multiplier, n, details)
        if abs(multiplier.imag) < jet_tol and 0 < multiplier.real < 1:
            return Classification(ClassificationKind.HYPERBOLIC, tau, multiplier.real + 0j, n, details)
        raise UndeterminedClassificationError(
            "Boundary accumulation point with an unexpected multiplier",
            {"tau": tau, "multiplier": multiplier, "iterations": n, **details},
        )

    for zeta in interior_fixed_points(F):
        multiplier = evaluate(dF, zeta)
        if abs(abs(multiplier) - 1) < app_config.ELLIPTIC_TOL:
            return Classification(ClassificationKind.ELLIPTIC_AUTOMORPHISM, zeta, multiplier, n)
    raise UndeterminedClassificationError(
        "Orbit neither converged nor accumulated at the boundary",
        {"last_iterate": z, "iterations": n, "interior_fixed_points": interior_fixed_points(F)},
    )


# Generators

def _multiplicity_clusters(roots: np.ndarray, radius: float = 1e-5) -> List[List[complex]]:
    clusters: List[List[complex]] = []
    for r in roots:
        for cluster in clusters:
            if abs(cluster[0] - r) < radius:
                cluster.append(complex(r))
                break
        else:
            clusters.append([complex(r)])
    return clusters


def locate_null_points(f: MapExpr) -> List[complex]:
    """Zeros of a rational f in the closed disk, counted once, with cancelled factors removed."""
    p, q = to_rational(f)
    p, q = p.trim(1e-14 * max(1.0, float(np.max(np.abs(p.coef))))), q
    if p.degree() < 1:
        return []
    q_roots = q.roots() if q.degree() >= 1 else np.array([])
    nulls = []
    for cluster in _multiplicity_clusters(p.roots()):
        center = np.mean(cluster)
        in_q = sum(1 for r in q_roots if abs(r - center) < 1e-5)
        if len(cluster) <= in_q or abs(center) > 1 + 1e-7:
            continue
        if abs(abs(center) - 1) <= 1e-7:
            center = center / abs(center)
            if abs(center - 1) < 1e-7:
                center = 1 + 0j
        nulls.append(complex(center))
    return nulls


def _is_zero_map(f: MapExpr) -> bool:
    return isinstance(f, Const) and f.value == 0


def berkson_porta(f: MapExpr, tau: complex) -> BerksonPorta:
    """p = f / ((z - tau)(1 - z conj(tau))); f generates a semigroup iff Re p >= 0."""
    tau = complex(tau)
    if abs(tau) > 1 + 1e-12:
        raise PreconditionError(f"Null point {tau} outside the closed disk.")
    if abs(tau) < 1 - 1e-12:
        value = evaluate(f, tau)
        if abs(value) > 1e-9:
            raise NotDivisibleError(f"f({tau}) = {value:.6g} does not vanish.")
    factor = mul(sub(Z, Const(tau)), sub(ONE, mul(Const(tau.conjugate()), Z)))
    p = div(f, factor)
    grid = validation_grid()
    real = evaluate(p, grid).real
    worst = int(np.argmin(real))
    is_generator = bool(real[worst] >= -app_config.SIGN_TOL)
    return BerksonPorta(tau, p, is_generator, None if is_generator else complex(grid[worst]))


def _harmonic_minimum(p: MapExpr, beta: float):
    """
    Infimum of Re p - beta/2 (1-|z|^2)/|1-z|^2 from the circle (where the
    second term vanishes) and the radial limit at 1; returns (m, uncertainty).
    """
    circle = circle_points(app_config.BOUNDARY_SAMPLES, app_config.TANGENCY_ARC)
    on_circle = evaluate(p, circle).real
    uncertainty = float(np.max(np.abs(np.diff(on_circle)))) if on_circle.size > 1 else 0.0

    def h(z):
        return evaluate(p, z).real - 0.5 * beta * (1 - np.abs(z) ** 2) / np.abs(1 - z) ** 2

    probe = StolzProbe(ladder_max=app_config.PROFILE_LADDER_MAX)
    try:
        radial = angular_limit(h, probe).value.real
    except DivergentLimitError:
        radial = float(h(probe.points()[-1:])[0])
        log_note(logger, f"Radial limit of the harmonic part did not settle; using {radial:.10g}")
    m = min(float(np.min(on_circle)), radial)
    interior = float(np.min(h(interior_grid())))
    if interior < m - app_config.VERDICT_TOL:
        log_note(logger, f"Interior sample {interior:.10g} lies below the boundary infimum {m:.10g}")
        m = interior
    return m, uncertainty


def null_point_profile(f: MapExpr, jet_tol: float = app_config.JET_TOL) -> GeneratorProfile:
    """
    Profile of f at the boundary null point 1: beta = f'(1), p = -f/(1-z)^2
    and the infimum m of Re p - beta/2 Re C. f is certified when m >= -1e-8.
    """
    log_step(logger, f"Null-point profile of {to_text(f)} at 1")
    limit = angular_limit(f)
    if abs(limit.value) > jet_tol:
        raise InputClassError(f"f does not vanish at 1 (limit {limit.value:.6g})", 1 + 0j)
    jet = jet_at(f, 1.0, 3)
    beta = jet.coeffs[1]
    if abs(beta.imag) > app_config.VERDICT_TOL:
        raise NotAGeneratorError(f"f'(1) = {beta:.6g} is not real: 1 is not a generator null point", 1 + 0j)
    beta = beta.real
    p = div(neg(f), power(sub(ONE, Z), 2))
    m, uncertainty = _harmonic_minimum(p, beta)
    if -app_config.SIGN_TOL <= m < 0:
        m = 0.0
    certified = m >= -app_config.VERDICT_TOL
    logger.debug(f"beta = {beta:.12g}, m = {m:.12g} (+/- {uncertainty:.2e})")
    return GeneratorProfile(f=f, tau=1 + 0j, beta=beta, jet=jet, p=p, m=m,
                            m_uncertainty=uncertainty, certified=certified)


def certify_generator(f: MapExpr, jet_tol: float = app_config.JET_TOL) -> BerksonPorta:
    """
    Finds the Denjoy-Wolff null point of f and checks the Berkson-Porta
    factor there: an interior zero first, then the boundary point 1, then any
    other boundary zero with a real nonnegative derivative.
    """
    if _is_zero_map(f):
        return BerksonPorta(0j, Const(0), True)
    nulls = locate_null_points(f)
    interior = [t for t in nulls if abs(t) < 1 - 1e-9]
    if interior:
        result = berkson_porta(f, interior[0])
    elif any(t == 1 for t in nulls):
        profile = null_point_profile(f, jet_tol)
        result = BerksonPorta(1 + 0j, profile.p, profile.certified, None, profile)
    else:
        result = None
        for t in nulls:
            slope = evaluate(differentiate(f), t)
            if abs(slope.imag) <= app_config.VERDICT_TOL and slope.real >= -app_config.VERDICT_TOL:
                result = berkson_porta(f, t)
                break
        if result is None:
            raise NotAGeneratorError(f"{to_text(f)} has no admissible null point in the closed disk")
    if not result.is_generator:
        raise NotAGeneratorError(f"{to_text(f)} is not an infinitesimal generator", result.witness)
    return result


def classify_generator(f: MapExpr, jet_tol: float = app_config.JET_TOL) -> Classification:
    certificate = certify_generator(f, jet_tol)
    tau = certificate.tau
    if _is_zero_map(f):
        return Classification(ClassificationKind.IDENTITY, 0j, 0j)
    if abs(tau) < 1 - 1e-9:
        multiplier = evaluate(differentiate(f), tau)
        if abs(multiplier.real) < app_config.PARABOLIC_TOL:
            return Classification(ClassificationKind.ELLIPTIC_AUTOMORPHISM, tau, multiplier)
        return Classification(ClassificationKind.DILATION, tau, multiplier)
    beta = certificate.profile.beta if certificate.profile else jet_at(f, tau, 1).coeffs[1].real
    if abs(beta) < app_config.PARABOLIC_TOL:
        return Classification(ClassificationKind.PARABOLIC, tau, complex(beta))
    return Classification(ClassificationKind.HYPERBOLIC, tau, complex(beta))


# Flows

class CashKarpIntegrator:
    """
    Adaptive Cash-Karp 5(4) integration of u' = -f(u), propagating the 5th
    order solution. Steps that would leave the disk are halved.
    """

    def __init__(self, f: MapExpr, tol: float = app_config.ODE_TOL,
                 max_step: float = app_config.ODE_MAX_STEP):
        self.f = f
        self.tol = tol
        self.max_step = max_step

    def _rhs(self, u: complex) -> complex:
        try:
            return -evaluate(self.f, u)
        except PoleError as e:
            raise IntegrationError(f"Generator not evaluable at u = {u}: {e}")

    def step(self, u: complex, h: float):
        """One trial step; returns (u_new, error_estimate)."""
        k = []
        for i in range(6):
            ui = u + h * sum(a * kj for a, kj in zip(_A[i], k))
            k.append(self._rhs(ui))
        u_new = u + h * sum(b * ki for b, ki in zip(_B5, k))
        error = abs(h * sum(e * ki for e, ki in zip(_TR, k)))
        return u_new, error

    def integrate(self, z0: complex, t_end: float) -> Trajectory:
        if t_end < 0:
            raise IntegrationError("Backward flows are not supported.")
        trajectory = Trajectory(z0=complex(z0), tol=self.tol, max_step=self.max_step)
        t, u = 0.0, complex(z0)
        trajectory.samples.append((t, u))
        h = min(self.max_step, t_end)
        while t < t_end:
            h = min(h, t_end - t, self.max_step)
            if h < app_config.MIN_STEP:
                if t_end - t < app_config.MIN_STEP:
                    break
                raise StepUnderflowError(f"Step size {h:.3e} underflowed at t = {t:.6g}, u = {u}")
            u_new, error = self.step(u, h)
            if abs(u_new) >= 1 - app_config.DISK_GUARD:
                trajectory.rejected_steps += 1
                h /= 2
                continue
            if error > self.tol:
                trajectory.rejected_steps += 1
                h *= max(0.2, 0.9 * (self.tol / error) ** 0.2)
                continue
            t = t_end if t_end - (t + h) < 1e-15 * max(1.0, t_end) else t + h
            u = u_new
            trajectory.samples.append((t, u))
            factor = 5.0 if error == 0 else min(5.0, max(0.2, 0.9 * (self.tol / error) ** 0.2))
            h *= factor
        if trajectory.samples[-1][0] != t_end:
            trajectory.samples[-1] = (t_end, trajectory.samples[-1][1])
        return trajectory


def flow(f: MapExpr, z0: complex, t_end: float, tol: float = app_config.ODE_TOL,
         certified: bool = False) -> Trajectory:
    """Trajectory of u' = -f(u), u(0) = z0, up to t_end."""
    if abs(z0) >= 1:
        raise InputClassError(f"Initial point {z0} is not in the open disk", complex(z0))
    if not certified:
        certify_generator(f)
    return CashKarpIntegrator(f, tol).integrate(z0, t_end)


def semigroup_check(f: MapExpr, z0: complex, s: float, t: float,
                    tol: float = app_config.ODE_TOL, certified: bool = False) -> float:
    """|F_{s+t}(z0) - F_t(F_s(z0))|."""
    if not certified:
        certify_generator(f)
    direct = flow(f, z0, s + t, tol, certified=True).final
    stepwise = flow(f, flow(f, z0, s, tol, certified=True).final, t, tol, certified=True).final
    return abs(direct - stepwise)


def generator_from_flow(f: MapExpr, z: complex, ladder: Iterable[int] = app_config.FLOW_LADDER,
                        tol: float = app_config.ODE_TOL, certified: bool = False) -> complex:
    """Extrapolates (z - F_t(z))/t to t = 0 over t_j = 2^-j."""
    if not certified:
        certify_generator(f)
    t_values = [2.0**-j for j in ladder]
    quotients = np.array([(z - flow(f, z, t, tol, certified=True).final) / t for t in t_values])
    extrapolants = richardson(quotients)
    index, _ = first_settled(extrapolants, 1e-8)
    if index is None:
        raise DivergentLimitError(f"Difference quotients of the flow of {to_text(f)} did not settle at {z}")
    return complex(extrapolants[index])


def log_slope(f: MapExpr, z: complex, t_min: float = 1.0, t_max: float = 5.0, n: int = 9,
              tau: complex = 1.0) -> float:
    """Least-squares slope of log|tau - F_t(z)| over t in [t_min, t_max]."""
    t = np.linspace(t_min, t_max, n)
    trajectory_end = [flow(f, z, ti, certified=True).final for ti in t]
    return float(np.polyfit(t, np.log(np.abs(tau - np.array(trajectory_end))), 1)[0])


def pr2_rate_check(profile: GeneratorProfile, t_list: Sequence[float], z_list: Sequence[complex],
                   tol: float = app_config.VERDICT_TOL) -> RateReport:
    """
    Horocycle contraction along the flow: the ratio |1-u|^2/(1-|u|^2) at
    u = F_t(z) is at most e^{-t beta} times its value at z.
    """
    if not profile.certified:
        raise NotAGeneratorError(f"{to_text(profile.f)} is not a certified generator")
    beta = profile.beta
    worst = (math.inf, 0.0, 0j)
    for t in t_list:
        for z in z_list:
            u = flow(profile.f, z, t, certified=True).final
            lhs = abs(1 - u) ** 2 / (1 - abs(u) ** 2)
            rhs = math.exp(-t * beta) * abs(1 - z) ** 2 / (1 - abs(z) ** 2)
            slack = rhs - lhs
            if slack < worst[0]:
                worst = (slack, t, complex(z))
    n_pairs = len(t_list) * len(z_list)
    return RateReport(beta=beta, ok=worst[0] >= -tol, min_slack=worst[0], worst_t=worst[1],
                      worst_z=worst[2], n_pairs=n_pairs)


def selfmap_to_generator(F: MapExpr, jet_tol: float = app_config.JET_TOL) -> GeneratorProfile:
    """
    f = -(1-z)^2 C(F(z)) for a self-map fixing 1, with the jet identities
    f'(1) = 2/alpha, f''(1) = 2(alpha^2 - F''(1))/alpha^2, f'''(1) = -(2/alpha) S_F(1)
    recorded in the profile details.
    """
    F_jet = jet_at(F, 1.0, 3)
    if abs(F_jet.coeffs[0] - 1) > jet_tol:
        raise PreconditionError(f"F(1) = {F_jet.coeffs[0]:.6g} differs from 1")
    alpha = F_jet.derivative(1)
    if abs(alpha.imag) > jet_tol or alpha.real <= 0:
        raise PreconditionError(f"F'(1) = {alpha:.6g} is not a positive real number")
    alpha = alpha.real
    f2, f3 = F_jet.derivative(2), F_jet.derivative(3)
    schwarzian = f3 / alpha - 1.5 * (f2 / alpha) ** 2

    f = neg(mul(power(sub(ONE, Z), 2), CayleyFwd(F)))
    profile = null_point_profile(f, jet_tol)
    expected = (2 / alpha, 2 * (alpha**2 - f2) / alpha**2, -(2 / alpha) * schwarzian)
    deviations = [abs(profile.jet.derivative(k + 1) - e) for k, e in enumerate(expected)]
    profile.details.update({
        "alpha": alpha,
        "selfmap_jet": F_jet,
        "expected": expected,
        "deviations": deviations,
        "identities_ok": all(d <= jet_tol * max(1.0, abs(e)) for d, e in zip(deviations, expected)),
        "hyperbolic_semigroup": profile.beta > app_config.PARABOLIC_TOL,
    })
    return profile


def trajectory_to_csv(trajectory: Trajectory, digits: int = app_config.CSV_DIGITS) -> str:
    """CSV text with header t,re,im and one row per accepted step."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["t", "re", "im"])
    for t, u in trajectory.samples:
        writer.writerow([f"{t:.{digits}g}", f"{u.real:.{digits}g}", f"{u.imag:.{digits}g}"])
    return buffer.getvalue()
