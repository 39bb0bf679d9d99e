# file: src/disk_rigidity/rigidity.py
"""
Rigidity analyzers for self-maps fixing 1 and for generators with a boundary
null point at 1.

Every analyzer returns a RigidityReport. Each rigidity condition becomes
certificates with stable ids; an equivalence ("X if and only if Y") is
certified by comparing the criterion with a direct test of the conclusion.
Printed forms of quantitative bounds are kept apart as audit findings and
never decide a run.
"""

import math
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from . import config as app_config
from .boundary import angular_limit, jet_at, reciprocal_bound_check
from .dynamics import (
    certify_generator, denjoy_wolff, null_point_profile, selfmap_to_generator,
)
from .exceptions import (
    DegenerateMobiusError, DivergentLimitError, InputClassError, NotAGeneratorError, PoleError,
    PreconditionError,
)
from .expressions import (
    ONE, Z, CayleyFwd, CayleyInv, Const, MapExpr, MobiusNode, add, compose, div, evaluate,
    mul, power, sub, to_text,
)
from .geometry import (
    boundary_deviation, boundary_jet_at_one, image_in_region, inclusion_audit,
    lft_region_image, region_contains,
)
from .holomap import boundary_jet, detect_lft, validate_selfmap
from .logging_utils import log_fail, log_note, log_pass, log_step, logger
from .mobius import Mobius
from .models import (
    AuditFinding, BoundaryJet, Certificate, ClassificationKind, DiskRegion, GeneratorProfile,
    RigidityReport, StolzProbe, Status, Verdict,
)
from .sampling import circle_points, disk_samples, interior_grid, radial_ladder

BOUNDARY_POINT = 1 + 0j
# Probe points of the whole-disk inclusion F(D) in D(1, 1/Re a)
INCLUSION_PROBES = (1j, -1j, -1.0, 0.0)
BOUND_PROBES = (0.0, 0.5)
EQUALITY_PROBES = 100
CONJUGATION_MU = (0.5, 1.0, 2.0)


class BoundaryData(NamedTuple):
    jet: BoundaryJet
    alpha: float
    f2: complex
    f3: complex
    a: complex
    schwarzian: complex


class ConjugationCheck(NamedTuple):
    lam: float
    conjugate: MapExpr
    alpha: complex
    f2: complex
    schwarzian: complex
    deviation: float
    ok: bool


class AutomorphismForm(NamedTuple):
    mobius: Optional[Mobius]
    deviation: float
    subcase: str


class FalsificationResult(NamedTuple):
    candidates: int
    self_maps: int
    jet_matches: int
    counterexamples: List[str]


# Helpers

def _check(report: RigidityReport, condition_id: str, passed: bool,
           witness: Optional[complex] = BOUNDARY_POINT, value: Optional[float] = None,
           detail: str = "", k: Optional[float] = None) -> Certificate:
    cert = report.certify(condition_id, passed, witness if witness is not None else BOUNDARY_POINT,
                          value, detail, k)
    _announce(cert)
    return cert


def _record(report: RigidityReport, condition_id: str, status: Status, detail: str = "",
            value: Optional[float] = None, witness: Optional[complex] = None,
            k: Optional[float] = None) -> Certificate:
    if status is Status.FAIL and witness is None:
        witness = BOUNDARY_POINT
    cert = report.record(Certificate(condition_id, status, witness, value, detail, k))
    _announce(cert)
    return cert


def _announce(cert: Certificate) -> None:
    suffix = f" ({cert.detail})" if cert.detail else ""
    if cert.status is Status.PASS:
        log_pass(logger, f"{cert.condition_id}{suffix}")
    elif cert.status is Status.FAIL:
        log_fail(logger, f"{cert}{suffix}")
    else:
        log_note(logger, f"{cert.condition_id}: {cert.status.value}{suffix}")


def _three_valued(excess: float, tol: float, uncertainty: float) -> Status:
    if excess <= tol:
        return Status.PASS
    if excess <= tol + uncertainty:
        return Status.INCONCLUSIVE
    return Status.FAIL


def _probes(seed: int, n: int = EQUALITY_PROBES) -> np.ndarray:
    return disk_samples(n, seed, r_max=0.95)


def _max_deviation(first, second, z: np.ndarray) -> Tuple[float, complex]:
    diff = np.abs(first(z) - second(z))
    worst = int(np.argmax(diff))
    return float(diff[worst]), complex(z[worst])


def _a_coefficient(alpha: float, f2: complex, lam: float = 1.0) -> complex:
    """a_lambda = (lambda F''(1) + alpha(1 - alpha))/alpha^2; lambda = 1 gives a."""
    return (lam * f2 + alpha * (1 - alpha)) / alpha**2


def _require_selfmap(F: MapExpr) -> None:
    check = validate_selfmap(F)
    if not check.ok:
        raise InputClassError(f"{to_text(F)} is not a self-map of the disk (max |F| = {check.max_modulus:.6g})",
                              check.witness)


def schwarzian_boundary(jet: BoundaryJet) -> complex:
    """S_F(tau) = F'''/F' - 3/2 (F''/F')^2 from a jet of order at least 3."""
    if jet.order < 3:
        raise PreconditionError(f"Schwarzian needs a jet of order 3, got {jet.order}")
    f1 = jet.derivative(1)
    if abs(f1) <= 1e-14:
        raise PreconditionError(f"F'({jet.tau}) = 0: the Schwarzian is undefined")
    return jet.derivative(3) / f1 - 1.5 * (jet.derivative(2) / f1) ** 2


def boundary_data(F: MapExpr, jet_tol: float = app_config.JET_TOL) -> BoundaryData:
    """Jet of order 3 at 1 with alpha, a and S_F(1); F(1) = 1 and alpha > 0 are required."""
    jet = jet_at(F, 1.0, 3)
    if abs(jet.coeffs[0] - 1) > jet_tol:
        raise PreconditionError(f"F(1) = {jet.coeffs[0]:.10g}, expected 1")
    alpha = jet.derivative(1)
    if abs(alpha.imag) > jet_tol or alpha.real <= 0:
        raise PreconditionError(f"F'(1) = {alpha:.10g} is not a positive real number")
    alpha = alpha.real
    f2, f3 = jet.derivative(2), jet.derivative(3)
    return BoundaryData(jet, alpha, f2, f3, _a_coefficient(alpha, f2), schwarzian_boundary(jet))


def _fill(report: RigidityReport, data: BoundaryData) -> None:
    report.jet = data.jet
    report.alpha = data.alpha
    report.a = data.a
    report.schwarzian = data.schwarzian
    report.values.update({"f2": data.f2, "f3": data.f3, "jet_method": data.jet.method})


# Self-maps

def affine_conjugate(F: MapExpr, k: float, tol: float = app_config.VERDICT_TOL) -> ConjugationCheck:
    """
    Conjugates F by Phi(z) = lambda z + 1 - lambda, lambda = k/(k+1), and
    checks Phi(D) = D(1, k), the boundary data of Phi^-1 o F o Phi at 1
    (same alpha, F'' scaled by lambda, S scaled by lambda^2) and
    Phi(D(1, mu)) = D(1, mu k/(mu + k + 1)).
    """
    lam = k / (k + 1)
    phi = Mobius(lam, 1 - lam, 0, 1)
    phi_inv = phi.inverse()
    conjugate = compose(MobiusNode(phi_inv), compose(F, MobiusNode(phi)))

    deviation = boundary_deviation(phi, DiskRegion.whole_disk(), DiskRegion(1.0, k), inverse=phi_inv)
    for mu in CONJUGATION_MU:
        deviation = max(deviation, boundary_deviation(
            phi, DiskRegion(1.0, mu), DiskRegion(1.0, mu * k / (mu + k + 1)), inverse=phi_inv,
        ))

    original = jet_at(F, 1.0, 3)
    conjugated = jet_at(conjugate, 1.0, 3)
    s_original = schwarzian_boundary(original)
    s_conjugated = schwarzian_boundary(conjugated)
    gaps = (
        abs(conjugated.derivative(1) - original.derivative(1)),
        abs(conjugated.derivative(2) - lam * original.derivative(2)),
        abs(s_conjugated - lam**2 * s_original),
    )
    scale = max(1.0, abs(original.derivative(2)), abs(s_original))
    ok = deviation <= app_config.HAUSDORFF_TOL and max(gaps) <= tol * scale
    logger.debug(f"Conjugation by lambda = {lam:.6g}: deviation {deviation:.2e}, jet gaps {max(gaps):.2e}")
    return ConjugationCheck(lam, conjugate, conjugated.derivative(1), conjugated.derivative(2),
                            s_conjugated, max(deviation, max(gaps)), ok)


def automorphism_form(F: MapExpr, data: Optional[BoundaryData] = None,
                      seed: int = app_config.SEED, jet_tol: float = app_config.JET_TOL) -> AutomorphismForm:
    """
    Rebuilds ((F'' - 2 alpha^2) z + conj F'')/(F'' z + conj F'' - 2 alpha^2)
    from the boundary data at 1 and measures its distance to F on probes.
    """
    data = data or boundary_data(F, jet_tol)
    alpha, f2 = data.alpha, data.f2
    if abs(alpha - 1) <= app_config.VERDICT_TOL:
        subcase = "identity" if abs(f2) <= app_config.VERDICT_TOL else "parabolic"
    else:
        subcase = "hyperbolic"
    if subcase == "identity":
        candidate = Mobius.identity()
    else:
        try:
            candidate = Mobius(f2 - 2 * alpha**2, np.conj(f2), f2, np.conj(f2) - 2 * alpha**2)
        except DegenerateMobiusError as e:
            logger.debug(f"Boundary data give no transformation: {e}")
            return AutomorphismForm(None, math.inf, subcase)
    z = _probes(seed)
    deviation, _ = _max_deviation(candidate, lambda w: evaluate(F, w), z)
    return AutomorphismForm(candidate, deviation, subcase)


def lft_analysis(F: MapExpr, k_list: Sequence[float] = (), samples: int = app_config.INCLUSION_SAMPLES,
                 seed: int = app_config.SEED, tol: float = app_config.VERDICT_TOL,
                 jet_tol: float = app_config.JET_TOL) -> RigidityReport:
    """
    LFT, automorphism and affine criteria for a self-map F with F(1) = 1 and
    0 < F'(1) < inf.

    F is an LFT exactly when F(D) lies in D(1, 1/Re a) and Re S_F(1) = 0. For
    each k in ``k_list`` the conjugated inclusion
    F(D(1, k)) in D(1, k/(1 + (k+1) Re a_lambda)) is checked as well (only
    when 1 is the Denjoy-Wolff point, alpha <= 1).
    """
    log_step(logger, f"LFT analysis of {to_text(F)}")
    report = RigidityReport(subject=to_text(F), role="selfmap")
    _require_selfmap(F)
    data = boundary_data(F, jet_tol)
    _fill(report, data)
    alpha, f2, f3, a, S = data.alpha, data.f2, data.f3, data.a, data.schwarzian
    attracting = alpha <= 1 + tol

    _check(report, "th2.A", a.real >= -app_config.SIGN_TOL, value=a.real)

    if a.real <= 1e-12:
        inclusion = _record(report, "th2.i", Status.VACUOUS, "Re a = 0: the region is the whole disk",
                            value=a.real)
    else:
        region = DiskRegion(1.0, 1.0 / a.real)
        verdict = image_in_region(F, DiskRegion.whole_disk(), region, n=samples,
                                  probes=INCLUSION_PROBES, seed=seed)
        report.values["th2.i.worst_ratio"] = verdict.worst_ratio
        inclusion = _check(report, "th2.i", verdict.ok, verdict.witness,
                           value=verdict.witness_ratio if not verdict.ok else verdict.worst_ratio,
                           detail=f"F(Δ) ⊆ {region}")
    real_schwarzian = _check(report, "th2.ii", abs(S.real) <= tol, value=S.real,
                             detail=f"S_F(1) = {S:.6g}")
    is_lft = inclusion.status.ok and real_schwarzian.status.ok

    for k in k_list:
        _conjugated_conditions(report, F, data, k, attracting, samples, seed, tol)

    # Automorphisms: Re a = 0 under the Schwarzian condition
    is_automorphism = is_lft and abs(a.real) <= tol
    if attracting:
        re_f2 = f2.real
        if abs(re_f2) <= tol:
            lam_ok = abs(alpha * (alpha - 1)) <= tol
        else:
            lam = alpha * (alpha - 1) / re_f2
            lam_ok = 0 < lam <= 1 + tol
        criterion = abs(S.real) <= tol and lam_ok
        _check(report, "colstar", criterion == is_automorphism,
               detail=f"criterion {criterion}, automorphism {is_automorphism}")
    else:
        _record(report, "colstar", Status.SKIPPED, "alpha > 1: 1 is not the Denjoy-Wolff point")

    if is_automorphism:
        form = automorphism_form(F, data, seed)
        report.values["automorphism_subcase"] = form.subcase
        _check(report, "pr1.form", form.deviation <= tol, value=form.deviation,
               detail=f"{form.subcase} automorphism rebuilt from the boundary data")
        report.add_verdict(Verdict.IS_AUTOMORPHISM)
        if form.subcase == "identity":
            report.add_verdict(Verdict.IS_IDENTITY)
        elif form.subcase == "parabolic":
            report.add_verdict(Verdict.PARABOLIC_AUTO)
        else:
            report.add_verdict(Verdict.HYPERBOLIC_AUTO)
    else:
        _record(report, "pr1.form", Status.SKIPPED, "not an automorphism")

    if is_lft:
        report.add_verdict(Verdict.IS_LFT)

    # Affine maps alpha z + 1 - alpha
    if attracting:
        criterion = inclusion.status.ok and abs(f2) <= tol and abs(f3) <= tol
        affine = lambda z: alpha * z + 1 - alpha
        deviation, worst = _max_deviation(affine, lambda z: evaluate(F, z), _probes(seed))
        is_affine = deviation <= tol
        _check(report, "col1", criterion == is_affine, worst,
               detail=f"criterion {criterion}, affine {is_affine}")
        if is_affine:
            report.add_verdict(Verdict.IS_AFFINE)
    else:
        _record(report, "col1", Status.SKIPPED, "alpha > 1")

    detection = detect_lft(F, seed)
    report.values["detect_lft"] = {"is_lft": detection.is_lft, "deviation": detection.deviation,
                                   "method": detection.method}
    _check(report, "lft.detect", detection.is_lft == is_lft,
           detail=f"detect_lft {detection.is_lft} ({detection.method}), analysis {is_lft}")
    return report


def _conjugated_conditions(report: RigidityReport, F: MapExpr, data: BoundaryData, k: float,
                           attracting: bool, samples: int, seed: int, tol: float) -> None:
    if not attracting:
        for condition_id in ("th2a.1", "th2a.3", "th2a.conj"):
            _record(report, condition_id, Status.SKIPPED, "alpha > 1: 1 is not the Denjoy-Wolff point", k=k)
        return
    lam = k / (k + 1)
    a_lambda = _a_coefficient(data.alpha, data.f2, lam)
    report.a_lambda[k] = a_lambda
    _check(report, "th2a.1", a_lambda.real >= -app_config.SIGN_TOL, value=a_lambda.real, k=k)

    denominator = 1 + (k + 1) * a_lambda.real
    if denominator <= 1e-12:
        _record(report, "th2a.3", Status.FAIL, f"1 + (k+1) Re a_lambda = {denominator:.3e}", k=k)
    else:
        dst = DiskRegion(1.0, k / denominator)
        verdict = image_in_region(F, DiskRegion(1.0, k), dst, n=samples, seed=seed)
        _check(report, "th2a.3", verdict.ok, verdict.witness,
               value=verdict.witness_ratio if not verdict.ok else verdict.worst_ratio,
               detail=f"F(D(1, {k:g})) ⊆ {dst}", k=k)

    conjugation = affine_conjugate(F, k, tol)
    _check(report, "th2a.conj", conjugation.ok, value=conjugation.deviation, k=k)

    audit = inclusion_audit(data.alpha, data.f2, k)
    parabolic = abs(data.alpha - 1) <= 1e-9
    report.audit.append(AuditFinding(
        "inclusion", certified_ok=audit.contained, printed_ok=audit.equal == parabolic,
        lhs=audit.k_image, rhs=audit.k_bound,
        note=f"k = {k:g}: radii {audit.k_image:.12g} and {audit.k_bound:.12g}, equal={audit.equal}",
    ))


def _mu(F: MapExpr) -> complex:
    """mu(F) = lim (r - F(r))/(r - 1)^3 from series arithmetic at 1."""
    quotient = div(sub(Z, F), power(sub(Z, ONE), 3))
    return jet_at(quotient, 1.0, 0).coeffs[0]


def _mu_radial(F: MapExpr) -> Optional[complex]:
    probe = StolzProbe(ladder_max=app_config.PROFILE_LADDER_MAX)
    try:
        return angular_limit(lambda z: (z - evaluate(F, z)) / (z - 1) ** 3, probe).value
    except DivergentLimitError:
        return None


def _ktilde_q(F: MapExpr) -> MapExpr:
    """q = (F - z)/(1 - z)^2, the nonnegative-real-part factor of z - F."""
    return div(sub(F, Z), power(sub(ONE, Z), 2))


def burns_krantz(F: MapExpr, n_samples: int = app_config.BOUND_SAMPLES, seed: int = app_config.SEED,
                 tol: float = app_config.VERDICT_TOL, jet_tol: float = app_config.JET_TOL) -> RigidityReport:
    """
    Boundary rigidity at 1 for F with jet (1, 1, 0, .): F is the identity when
    F'''(1) = 0, otherwise mu(F) = -F'''(1)/6 >= 0 and
    |F - z|^2 <= 2 mu |1-z|^6 Re q/(1 - |z|^2) with q = (F - z)/(1 - z)^2.
    """
    log_step(logger, f"Boundary identity test for {to_text(F)}")
    report = RigidityReport(subject=to_text(F), role="selfmap")
    _require_selfmap(F)
    jet = jet_at(F, 1.0, 3)
    if not jet.matches((1, 1, 0), jet_tol):
        raise PreconditionError(f"Jet {jet.coeffs[:3]} at 1 is not (1, 1, 0)")
    report.jet = jet
    report.alpha = 1.0
    f3 = jet.derivative(3)
    report.values["f3"] = f3

    if abs(f3) <= tol:
        z = disk_samples(app_config.PROBE_COUNT, seed, r_max=0.99)
        deviation, worst = _max_deviation(lambda w: evaluate(F, w), lambda w: w, z)
        report.values["identity_deviation"] = deviation
        report.values["mu"] = 0.0
        cert = _check(report, "th1", deviation < tol, worst, value=deviation)
        if cert.status is Status.PASS:
            report.add_verdict(Verdict.IS_IDENTITY)
            report.add_verdict(Verdict.IS_AUTOMORPHISM)
        return report

    mu = _mu(F)
    radial = _mu_radial(F)
    report.values["mu"] = mu.real
    report.values["mu_radial"] = radial
    expected = -f3 / 6
    _check(report, "bk.mu", abs(mu - expected) <= tol * max(1.0, abs(mu)) and mu.real >= -app_config.SIGN_TOL
           and abs(mu.imag) <= tol, value=mu.real, detail=f"mu = {mu:.10g}, -F'''(1)/6 = {expected:.10g}")

    q = _ktilde_q(F)
    z = np.concatenate([np.asarray(BOUND_PROBES, dtype=complex), disk_samples(n_samples, seed)])
    F_values = evaluate(F, z)
    q_values = evaluate(q, z)
    lhs = np.abs(F_values - z) ** 2
    weight = np.abs(1 - z) ** 2 / (1 - np.abs(z) ** 2)
    certified_rhs = 2 * mu.real * np.abs(1 - z) ** 4 * weight * q_values.real
    printed_rhs = mu.real * ((z - F_values) * (1 - np.conj(z)) ** 2).real / (1 - np.abs(z) ** 2)
    tolerance = app_config.SIGN_TOL * np.maximum(1.0, lhs)

    certified_bad = np.nonzero(lhs > certified_rhs + tolerance)[0]
    _check(report, "col6.certified", certified_bad.size == 0,
           complex(z[certified_bad[0]]) if certified_bad.size else None,
           value=float(np.min(certified_rhs - lhs)))
    chain = reciprocal_bound_check(q, n_samples, seed, BOUND_PROBES, jet_tol)
    report.values["reciprocal_k"] = chain.k
    if chain.certified_ok != (certified_bad.size == 0):
        log_note(logger, "Reciprocal bound on q and the pointwise bound on F disagree")

    printed_bad = np.nonzero(lhs > printed_rhs + tolerance)[0]
    first = int(printed_bad[0]) if printed_bad.size else None
    report.audit.append(AuditFinding(
        "col6.printed", certified_ok=certified_bad.size == 0, printed_ok=first is None,
        witness=None if first is None else complex(z[first]),
        lhs=None if first is None else float(lhs[first]),
        rhs=None if first is None else float(printed_rhs[first]),
        note="printed orientation Re[(z - F)(1 - conj z)^2] is nonpositive",
    ))
    return report


def falsify_burns_krantz(n: int = 200, seed: int = app_config.SEED,
                         jet_tol: float = app_config.JET_TOL) -> FalsificationResult:
    """
    Seeded search over z + c (z - 1)^j, j <= 3, for a self-map with jet
    (1, 1, 0, 0) at 1 that is not the identity. Candidate 0 is c = 0.
    """
    rng = np.random.default_rng(seed)
    self_maps = jet_matches = 0
    counterexamples: List[str] = []
    z = disk_samples(app_config.PROBE_COUNT, seed, r_max=0.99)
    for index in range(n):
        if index == 0:
            c, j = 0j, 3
        else:
            j = int(rng.integers(1, 4))
            c = 0.25 * rng.random() * np.exp(2j * np.pi * rng.random())
        F = add(Z, mul(Const(c), power(sub(Z, ONE), j)))
        if not validate_selfmap(F, 1024).ok:
            continue
        self_maps += 1
        if not boundary_jet(F, 1.0, 3).matches((1, 1, 0, 0), jet_tol):
            continue
        jet_matches += 1
        if float(np.max(np.abs(evaluate(F, z) - z))) >= app_config.VERDICT_TOL:
            counterexamples.append(to_text(F))
    logger.debug(f"{n} candidates, {self_maps} self-maps, {jet_matches} with jet (1,1,0,0)")
    return FalsificationResult(n, self_maps, jet_matches, counterexamples)


def quantitative_bounds(F: MapExpr, samples: int = app_config.INCLUSION_SAMPLES,
                        seed: int = app_config.SEED, tol: float = app_config.VERDICT_TOL,
                        jet_tol: float = app_config.JET_TOL) -> RigidityReport:
    """
    Compares F with G = C^-1(C(z)/alpha + a). When F(D) lies in D(1, 1/Re a)
    the Schwarzian must be real and nonpositive, and the ratio
    K = |F - G|^2/(-S_F(1)) is profiled along the radius (G = F when S = 0).
    For alpha = 1, F''(1) = 0 the bound |F - z|^2 <= mu(F) K~(z) is checked.
    """
    log_step(logger, f"Quantitative bounds for {to_text(F)}")
    report = RigidityReport(subject=to_text(F), role="selfmap")
    _require_selfmap(F)
    data = boundary_data(F, jet_tol)
    _fill(report, data)
    alpha, a, S = data.alpha, data.a, data.schwarzian

    if not _check(report, "th3.i", a.real >= -app_config.SIGN_TOL, value=a.real).status.ok:
        log_fail(logger, "Re a < 0: numerical breakdown or F is not a self-map fixing 1")
        return report

    G = CayleyInv(add(mul(Const(1 / alpha), CayleyFwd(Z)), Const(a)))
    report.values["G"] = to_text(G)
    if a.real <= 1e-12:
        hypothesis = True
    else:
        hypothesis = image_in_region(F, DiskRegion.whole_disk(), DiskRegion(1.0, 1.0 / a.real),
                                     n=samples, probes=INCLUSION_PROBES, seed=seed).ok
    if not hypothesis:
        _record(report, "th3.ii", Status.SKIPPED, "F(Δ) is not contained in D(1, 1/Re a)")
    else:
        _check(report, "th3.ii", abs(S.imag) <= tol and S.real <= tol, value=S.real,
               detail=f"S_F(1) = {S:.6g}")
        if abs(S) <= tol:
            deviation, worst = _max_deviation(lambda z: evaluate(F, z), lambda z: evaluate(G, z),
                                              _probes(seed))
            report.values["G_deviation"] = deviation
            _check(report, "th3.equal", deviation <= 1e-10 * max(1.0, 1 / alpha), worst, value=deviation)
        else:
            _k_profile(report, F, G, -S.real)

    if abs(alpha - 1) <= tol and abs(data.f2) <= tol and abs(data.f3) > tol:
        _mu_bound(report, F, seed)
    return report


def _k_profile(report: RigidityReport, F: MapExpr, G: MapExpr, scale: float) -> None:
    r = radial_ladder(1.0, app_config.LADDER_MIN, app_config.PROFILE_LADDER_MAX)
    K = np.abs(evaluate(F, r) - evaluate(G, r)) ** 2 / scale
    grid = interior_grid(500)
    K_grid = np.abs(evaluate(F, grid) - evaluate(G, grid)) ** 2 / scale
    report.values["K_profile"] = [[float(x), float(y)] for x, y in zip(r, K)]
    report.values["K_max"] = float(np.max(K_grid))
    tail = K[-app_config.RESIDUAL_RUNGS:]
    decreasing = bool(np.all(np.diff(tail) <= 1e-15))
    vanishing = tail[-1] <= 1e-6 * max(1.0, float(np.max(K)))
    bad = int(np.argmax(K)) if not decreasing else len(r) - 1
    _check(report, "th3.K", decreasing and vanishing and bool(np.all(np.isfinite(K_grid))),
           complex(r[bad]), value=float(tail[-1]))


def _mu_bound(report: RigidityReport, F: MapExpr, seed: int) -> None:
    mu = _mu(F).real
    report.values["mu"] = mu
    q = _ktilde_q(F)

    def ktilde(z):
        return 2 * np.abs(1 - z) ** 6 * evaluate(q, z).real / (1 - np.abs(z) ** 2)

    z = np.concatenate([np.asarray(BOUND_PROBES, dtype=complex),
                        disk_samples(app_config.BOUND_SAMPLES, seed)])
    lhs = np.abs(evaluate(F, z) - z) ** 2
    rhs = mu * ktilde(z)
    bad = np.nonzero(lhs > rhs + app_config.SIGN_TOL * np.maximum(1.0, lhs))[0]
    _check(report, "bk.continuous", bad.size == 0, complex(z[bad[0]]) if bad.size else None,
           value=float(np.min(rhs - lhs)))

    r = radial_ladder(1.0, app_config.LADDER_MIN, app_config.PROFILE_LADDER_MAX)
    profile = ktilde(r)
    report.values["Ktilde_profile"] = [[float(x), float(y)] for x, y in zip(r, profile)]
    tail = profile[-app_config.RESIDUAL_RUNGS:]
    _check(report, "bk.ktilde", bool(np.all(np.diff(tail) <= 0)) and tail[-1] < 1e-12,
           complex(r[-1]), value=float(tail[-1]))


def repelling_analysis(M: Mobius, tol: float = 1e-9) -> RigidityReport:
    """
    A transformation with a repelling fixed point at 1 (alpha > 1): either a
    hyperbolic automorphism of the disk (Re a = 0) or a map with an interior
    Denjoy-Wolff point zeta on the boundary of D(1, k0), k0 = (alpha-1)/(alpha Re a),
    which M maps onto itself.
    """
    log_step(logger, f"Repelling fixed point analysis of {M}")
    report = RigidityReport(subject=str(M), role="selfmap")
    alpha, f2 = boundary_jet_at_one(M)
    if alpha <= 1 + tol:
        raise PreconditionError(f"M'(1) = {alpha:.10g}: 1 is not a repelling fixed point")
    a = _a_coefficient(alpha, f2)
    report.alpha, report.a = alpha, a
    report.schwarzian = 0j
    others = [fp.point for fp in M.fixed_points() if abs(fp.point - 1) > 1e-9]
    report.values["fixed_points"] = others

    if abs(a.real) <= app_config.VERDICT_TOL:
        on_circle = all(abs(abs(p) - 1) <= 1e-9 for p in others)
        _check(report, "rem3.aut", on_circle, others[0] if others else None,
               detail="hyperbolic automorphism: both fixed points on the circle")
        if on_circle:
            report.add_verdict(Verdict.HYPERBOLIC_AUTO)
        return report

    interior = [p for p in others if abs(p) < 1 - 1e-12]
    if not interior:
        _record(report, "rem3.k0", Status.FAIL, "no interior fixed point although Re a > 0",
                witness=others[0] if others else BOUNDARY_POINT)
        return report
    zeta = interior[0]
    k0 = (alpha - 1) / (alpha * a.real)
    ratio = abs(1 - zeta) ** 2 / (1 - abs(zeta) ** 2)
    report.values.update({"zeta": zeta, "k0": k0, "zeta_ratio": ratio})
    _check(report, "rem3.k0", abs(ratio - k0) <= tol * max(1.0, k0), zeta, value=ratio - k0)

    horocycle = DiskRegion(1.0, k0)
    deviation = boundary_deviation(M, horocycle, horocycle, inverse=M.inverse())
    report.values["invariance_deviation"] = deviation
    _check(report, "rem3.invariant", deviation <= app_config.HAUSDORFF_TOL, zeta, value=deviation,
           detail=f"M maps the boundary of {horocycle} onto itself")

    larger = DiskRegion(1.0, 2 * k0)
    _check(report, "rem3.horocycles", region_contains(lft_region_image(M, larger.k), larger),
           detail=f"M({larger}) ⊆ {larger}")
    return report


# Generators

def generator_rigidity(profile: GeneratorProfile, seed: int = app_config.SEED,
                       n_samples: int = app_config.BOUND_SAMPLES,
                       tol: float = app_config.VERDICT_TOL,
                       jet_tol: float = app_config.JET_TOL) -> RigidityReport:
    """
    Rigidity of a certified generator f = -(1-z)^2 p with null point 1.

    f generates linear fractional maps iff f'(1) - Re f''(1) <= 2m and
    f'''(1) = 0; the group case is m = 0 and the affine case
    f''(1) = f'''(1) = 0 with Re p >= f'(1)/2. Otherwise f is compared with
    its quadratic Taylor polynomial g at 1.
    """
    f = profile.f
    log_step(logger, f"Generator rigidity of {to_text(f)}")
    if not profile.certified:
        raise PreconditionError(f"{to_text(f)} is not a certified generator (m = {profile.m:.6g})")
    report = RigidityReport(subject=to_text(f), role="generator")
    jet = profile.jet
    beta, f2, f3 = profile.beta, jet.derivative(2), jet.derivative(3)
    m, uncertainty = profile.m, profile.m_uncertainty
    report.jet, report.m = jet, m
    report.values.update({"beta": beta, "f2": f2, "f3": f3, "m_uncertainty": uncertainty})
    gap = beta - f2.real
    report.values["gap"] = gap

    _check(report, "th5.i", gap >= -tol, value=gap)
    rem6 = _three_valued(abs(gap - 2 * m), tol, 2 * uncertainty)
    _record(report, "rem6", rem6, f"f'(1) - Re f''(1) = {gap:.10g}, 2m = {2 * m:.10g}", value=gap - 2 * m)
    th4_i = _three_valued(gap - 2 * m, tol, 2 * uncertainty)
    _record(report, "th4.i", th4_i, value=gap - 2 * m)
    th4_ii = _check(report, "th4.ii", abs(f3) <= tol, value=abs(f3))
    is_lft = th4_i is Status.PASS and th4_ii.status is Status.PASS

    z = _probes(seed)
    g = add(mul(Const(beta), sub(Z, ONE)), mul(Const(f2 / 2), power(sub(Z, ONE), 2)))
    deviation, worst = _max_deviation(lambda w: evaluate(f, w), lambda w: evaluate(g, w), z)
    report.values["quadratic_deviation"] = deviation
    _check(report, "lem4", (deviation <= tol) == is_lft, worst,
           detail=f"max |f - g| = {deviation:.3e}, verdict {is_lft}")

    dfg = abs(gap) <= tol and abs(f3) <= tol
    group = is_lft and abs(m) <= tol
    _check(report, "col3.dfg", dfg == group, detail=f"criterion {dfg}, group {group}")
    if is_lft:
        report.add_verdict(Verdict.IS_LFT)
    if group:
        report.add_verdict(Verdict.IS_AUTOMORPHISM)
        if abs(beta) > tol:
            report.add_verdict(Verdict.HYPERBOLIC_AUTO)
        elif abs(f2.imag) > tol:
            report.add_verdict(Verdict.PARABOLIC_AUTO)
        else:
            report.add_verdict(Verdict.IS_IDENTITY)

    grid_minimum = float(np.min(evaluate(profile.p, interior_grid(500)).real))
    affine_criterion = abs(f2) <= tol and abs(f3) <= tol and grid_minimum >= 0.5 * beta - app_config.SIGN_TOL
    affine_deviation, affine_worst = _max_deviation(lambda w: evaluate(f, w), lambda w: beta * (w - 1), z)
    is_affine = affine_deviation <= tol
    _check(report, "col5", affine_criterion == is_affine, affine_worst,
           detail=f"criterion {affine_criterion}, f = {beta:.6g}(z - 1): {is_affine}")
    if is_affine:
        report.add_verdict(Verdict.IS_AFFINE)

    if abs(beta) <= tol and abs(f2) <= tol:
        _record(report, "th5.ii", Status.PASS, "g vanishes identically")
    else:
        try:
            g_profile = null_point_profile(g, jet_tol)
            _check(report, "th5.ii", g_profile.certified, value=g_profile.m)
        except (NotAGeneratorError, InputClassError) as e:
            _record(report, "th5.ii", Status.FAIL, str(e), witness=getattr(e, "witness", None))

    if th4_i is Status.PASS and abs(f3) > tol:
        _quadratic_remainder(report, f, g, f3, seed, n_samples, tol, jet_tol)
    else:
        for condition_id in ("th5.iii.real", "th5.iii.certified"):
            _record(report, condition_id, Status.SKIPPED, "needs th4.i and f'''(1) != 0")
    return report


def _quadratic_remainder(report: RigidityReport, f: MapExpr, g: MapExpr, f3: complex, seed: int,
                         n_samples: int, tol: float, jet_tol: float) -> None:
    real = _check(report, "th5.iii.real", abs(f3.imag) <= tol and f3.real >= -tol, value=f3.real,
                  detail=f"f'''(1) = {f3:.10g}")
    if not real.status.ok:
        return
    c = f3.real
    q = div(sub(g, f), power(sub(ONE, Z), 2))
    z = np.concatenate([np.asarray(BOUND_PROBES, dtype=complex), disk_samples(n_samples, seed)])
    diff = evaluate(f, z) - evaluate(g, z)
    lhs = np.abs(diff) ** 2
    denominator = 1 - np.abs(z) ** 2
    certified_rhs = c / 3 * np.abs(1 - z) ** 6 * evaluate(q, z).real / denominator
    printed_rhs = c / 6 * (diff * (1 - np.conj(z)) ** 2).real / denominator
    oriented_rhs = -printed_rhs
    tolerance = app_config.SIGN_TOL * np.maximum(1.0, lhs)
    report.values["th5.iii.z0"] = {"lhs": float(lhs[0]), "rhs": float(oriented_rhs[0])}

    bad = np.nonzero(lhs > certified_rhs + tolerance)[0]
    _check(report, "th5.iii.certified", bad.size == 0, complex(z[bad[0]]) if bad.size else None,
           value=float(np.min(certified_rhs - lhs)))
    chain = reciprocal_bound_check(q, n_samples, seed, BOUND_PROBES, jet_tol)
    report.values["reciprocal_k"] = chain.k
    if abs(chain.k + c / 6) > tol * max(1.0, c):
        log_note(logger, f"q'(1) = {chain.k:.10g} differs from -f'''(1)/6 = {-c / 6:.10g}")

    for condition_id, rhs, note in (
        ("th5.iii.printed", printed_rhs, "printed orientation Re[(f - g)(1 - conj z)^2]"),
        ("th5.iii.oriented", oriented_rhs, "orientation Re[(g - f)(1 - conj z)^2], factor 1/6"),
    ):
        failing = np.nonzero(lhs > rhs + tolerance)[0]
        first = int(failing[0]) if failing.size else None
        report.audit.append(AuditFinding(
            condition_id, certified_ok=bad.size == 0, printed_ok=first is None,
            witness=None if first is None else complex(z[first]),
            lhs=None if first is None else float(lhs[first]),
            rhs=None if first is None else float(rhs[first]),
            note=note,
        ))


def _is_automorphism(F: MapExpr) -> bool:
    modulus = np.abs(evaluate(F, circle_points(512, app_config.TANGENCY_ARC)))
    return bool(np.all(np.abs(modulus - 1) <= 1e-9))


def selfmap_generator_checks(F: MapExpr, tol: float = app_config.VERDICT_TOL,
                             jet_tol: float = app_config.JET_TOL) -> RigidityReport:
    """
    Links between F and generators: z - F generates a semigroup, and for a
    Denjoy-Wolff point 1 the generator -(1-z)^2 C(F) is a hyperbolic group
    generator exactly when F is an automorphism, with f'(1) = 2 exactly in
    the parabolic case.
    """
    log_step(logger, f"Generator checks for {to_text(F)}")
    report = RigidityReport(subject=to_text(F), role="selfmap")
    _require_selfmap(F)
    try:
        certify_generator(sub(Z, F), jet_tol)
        _check(report, "rem5", True)
    except (NotAGeneratorError, PoleError) as e:
        _record(report, "rem5", Status.FAIL, str(e), witness=getattr(e, "witness", None))

    profile = selfmap_to_generator(F, jet_tol)
    details = profile.details
    report.alpha = details["alpha"]
    report.jet = details["selfmap_jet"]
    report.values["lem5_deviations"] = details["deviations"]
    _check(report, "lem5", details["identities_ok"], value=max(details["deviations"]))

    classification = denjoy_wolff(F, jet_tol=jet_tol)
    report.values["classification"] = classification.kind.value
    boundary_dw = (classification.kind in (ClassificationKind.HYPERBOLIC, ClassificationKind.PARABOLIC)
                   and abs(classification.tau_dw - 1) <= 1e-6)
    if not boundary_dw:
        for condition_id in ("col4", "col4.parabolic"):
            _record(report, condition_id, Status.SKIPPED, "1 is not the Denjoy-Wolff point")
        return report

    jet = profile.jet
    beta, f2, f3 = profile.beta, jet.derivative(2), jet.derivative(3)
    hyperbolic_group = abs(beta - f2.real) <= tol and abs(f3) <= tol and beta > tol
    automorphism = _is_automorphism(F)
    _check(report, "col4", hyperbolic_group == automorphism,
           detail=f"automorphism {automorphism}, hyperbolic group {hyperbolic_group}")
    parabolic = classification.kind is ClassificationKind.PARABOLIC
    _check(report, "col4.parabolic", parabolic == (abs(beta - 2) <= 1e-8),
           detail=f"f'(1) = {beta:.10g}, {classification.kind.value}")
    return report
