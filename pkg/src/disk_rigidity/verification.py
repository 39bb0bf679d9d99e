# file: src/disk_rigidity/verification.py
"""
Built-in corpus and the verify suite.

Each check is registered under a stable row id and produces one VerifyRow:
``certified`` decides the run, ``printed`` reports the displayed form of a
bound where one is audited.
"""

import math
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from . import config as app_config
from .boundary import halfplane_decompose, jet_at, julia_bound_check, reciprocal_bound_check
from .dynamics import (
    certify_generator, denjoy_wolff, flow, null_point_profile, pr2_rate_check, selfmap_to_generator,
    semigroup_check,
)
from .exceptions import DiskRigidityError
from .expressions import CayleyFwd, Const, MapExpr, Z, add, evaluate, mul
from .geometry import (
    boundary_deviation, contains, euclidean_form, inclusion_audit, lft_region_image,
)
from .holomap import as_mobius, detect_lft, validate_selfmap
from .logging_utils import log_fail, log_pass, log_step, logger
from .mobius import Mobius
from .models import ClassificationKind, DiskRegion, RigidityReport, Status, Verdict, VerifyRow
from .parser import parse_map
from .rigidity import (
    burns_krantz, falsify_burns_krantz, generator_rigidity, lft_analysis, repelling_analysis,
    selfmap_generator_checks,
)
from .sampling import disk_samples

CORPUS: Dict[str, str] = {
    "ex1": "0.5*(z+1)+0.05*(z-1)^4",
    "hyperbolic": "(z+0.3)/(1+0.3*z)",
    "parabolic": "mobius(2-i, i, -i, 2+i)",
    "affine": "0.5*z+0.5",
    "identity": "z",
    "bk": "z-0.05*(z-1)^3",
    "repelling": "z/(2-z)",
    "gen.linear": "z-1",
    "gen.quadratic": "z^2-1",
    "gen.cubic": "(z^2-1)-(1-z)^2-(1-z)^3",
    "gen.parabolic": "-i*(1-z)^2",
}

RECIPROCAL_CORPUS = ("1-z", "(1-z)/(2-z)", "0.5*(1-z^2)")


class Outcome(NamedTuple):
    passed: bool
    detail: str = ""
    witness: Optional[complex] = None
    printed: Optional[bool] = None


class VerifyCheck(NamedTuple):
    row_id: str
    topic: str
    run: Callable[[int], Outcome]


CHECKS: List[VerifyCheck] = []


def verify_check(row_id: str, topic: str):
    def register(fn: Callable[[int], Outcome]) -> Callable[[int], Outcome]:
        CHECKS.append(VerifyCheck(row_id, topic, fn))
        return fn
    return register


@lru_cache(maxsize=None)
def corpus_map(name: str) -> MapExpr:
    return parse_map(CORPUS[name])


@lru_cache(maxsize=None)
def _lft_report(name: str, seed: int) -> RigidityReport:
    return lft_analysis(corpus_map(name), seed=seed)


@lru_cache(maxsize=None)
def _generator_report(name: str, seed: int) -> RigidityReport:
    return generator_rigidity(null_point_profile(corpus_map(name)), seed=seed)


@lru_cache(maxsize=None)
def _selfmap_generator_report(name: str) -> RigidityReport:
    return selfmap_generator_checks(corpus_map(name))


@lru_cache(maxsize=None)
def _bk_report(name: str, seed: int) -> RigidityReport:
    return burns_krantz(corpus_map(name), seed=seed)


def _status_of(report: RigidityReport, condition_id: str) -> Status:
    cert = report.certificate(condition_id)
    return cert.status if cert is not None else Status.FAIL


def _audit(report: RigidityReport, condition_id: str):
    return next((finding for finding in report.audit if finding.condition_id == condition_id), None)


def herglotz_corpus(seed: int, n: int = 20) -> List[MapExpr]:
    """p = w C + c + d z with w >= 0 and Re c >= |d|, so Re p >= 0."""
    rng = np.random.default_rng(seed)
    corpus = []
    for _ in range(n):
        w = 2.0 * rng.random()
        d = 0.5 * rng.random() * np.exp(2j * np.pi * rng.random())
        c = complex(abs(d) + rng.random(), 2.0 * rng.random() - 1.0)
        corpus.append(add(add(mul(Const(w), CayleyFwd(Z)), Const(c)), mul(Const(complex(d)), Z)))
    return corpus


# Quartic perturbation of the affine map

@verify_check("ex1.selfmap", "quartic perturbation, b = 0.05: self-map test")
def _ex1_selfmap(seed: int) -> Outcome:
    check = validate_selfmap(corpus_map("ex1"), app_config.BOUNDARY_SAMPLES)
    return Outcome(check.ok, f"max |F| = {check.max_modulus:.15f}", None if check.ok else check.witness)


@verify_check("ex1.jet", "quartic perturbation: jet (1, 1/2, 0, 0) at 1")
def _ex1_jet(seed: int) -> Outcome:
    jet = jet_at(corpus_map("ex1"), 1.0, 3)
    derivatives = [jet.derivative(k) for k in range(4)]
    gap = max(abs(d - e) for d, e in zip(derivatives, (1, 0.5, 0, 0)))
    return Outcome(gap <= 1e-8, f"{jet.method} jet, max gap {gap:.2e}")


@verify_check("ex1.not_lft", "quartic perturbation: not a linear fractional map")
def _ex1_not_lft(seed: int) -> Outcome:
    detection = detect_lft(corpus_map("ex1"), seed)
    return Outcome(not detection.is_lft and detection.deviation > 1e-3,
                   f"{detection.method} deviation {detection.deviation:.3e}")


@verify_check("ex1.th2.i", "quartic perturbation: only the whole-disk inclusion fails")
def _ex1_th2i(seed: int) -> Outcome:
    report = _lft_report("ex1", seed)
    failed = [cert.condition_id for cert in report.failed()]
    cert = report.certificate("th2.i")
    ratio = cert.value if cert is not None and cert.value is not None else math.nan
    witness = cert.witness if cert is not None else None
    passed = (failed == ["th2.i"] and witness is not None and abs(witness - 1j) <= 1e-12
              and abs(ratio - 1.1212) <= 1e-3)
    return Outcome(passed, f"failed {failed}, ratio {ratio:.6f}", witness)


# Hyperbolic automorphism (z + c)/(1 + c z), c = 0.3

@verify_check("hyp.classify", "hyperbolic automorphism: classification and multiplier")
def _hyp_classify(seed: int) -> Outcome:
    classification = denjoy_wolff(corpus_map("hyperbolic"))
    alpha = classification.multiplier.real
    passed = classification.kind is ClassificationKind.HYPERBOLIC and abs(alpha - 7 / 13) <= 1e-9
    return Outcome(passed, f"{classification}")


@verify_check("hyp.re_a", "hyperbolic automorphism: Re a = 0 and automorphism verdict")
def _hyp_re_a(seed: int) -> Outcome:
    report = _lft_report("hyperbolic", seed)
    passed = abs(report.a.real) <= 1e-9 and {Verdict.IS_AUTOMORPHISM, Verdict.HYPERBOLIC_AUTO} <= report.verdicts
    return Outcome(passed, f"Re a = {report.a.real:.3e}, verdicts {sorted(v.value for v in report.verdicts)}")


@verify_check("hyp.d1", "hyperbolic automorphism: exact horocycle images")
def _hyp_images(seed: int) -> Outcome:
    M = as_mobius(corpus_map("hyperbolic"))
    deviation = max(
        boundary_deviation(M, DiskRegion(1.0, k), lft_region_image(M, k), inverse=M.inverse())
        for k in (0.5, 1.0, 2.0)
    )
    return Outcome(deviation <= app_config.HAUSDORFF_TOL, f"max boundary deviation {deviation:.2e}")


@verify_check("hyp.lem5", "hyperbolic automorphism: generator jet f'(1) = f''(1) = 26/7, f'''(1) = 0")
def _hyp_lem5(seed: int) -> Outcome:
    profile = selfmap_to_generator(corpus_map("hyperbolic"))
    values = [profile.jet.derivative(k) for k in (1, 2, 3)]
    gap = max(abs(v - e) for v, e in zip(values, (26 / 7, 26 / 7, 0)))
    return Outcome(gap <= 1e-8 and profile.details["identities_ok"], f"max gap {gap:.2e}")


# Flows

@verify_check("flow.linear", "flow of z - 1 from 0 at t = ln 2")
def _flow_linear(seed: int) -> Outcome:
    end = flow(corpus_map("gen.linear"), 0j, math.log(2)).final
    return Outcome(abs(end - 0.5) <= 1e-9, f"F_t(0) = {end:.15g}")


@verify_check("flow.tanh", "flow of z^2 - 1 from 0 at t = 1")
def _flow_tanh(seed: int) -> Outcome:
    end = flow(corpus_map("gen.quadratic"), 0j, 1.0).final
    return Outcome(abs(end - math.tanh(1.0)) <= 1e-9, f"F_t(0) = {end:.15g}")


@verify_check("flow.semigroup", "semigroup property on 20 seeded triples per generator")
def _flow_semigroup(seed: int) -> Outcome:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for name in ("gen.linear", "gen.quadratic"):
        f = corpus_map(name)
        certify_generator(f)
        points = disk_samples(20, rng=rng, r_max=0.9)
        times = rng.uniform(0.1, 2.0, size=(20, 2))
        for z0, (s, t) in zip(points, times):
            worst = max(worst, semigroup_check(f, complex(z0), float(s), float(t), certified=True))
    return Outcome(worst <= 1e-8, f"max deviation {worst:.2e}")


@verify_check("pr2.equality", "horocycle contraction is an equality for z^2 - 1")
def _pr2_equality(seed: int) -> Outcome:
    profile = null_point_profile(corpus_map("gen.quadratic"))
    u = flow(profile.f, 0j, 1.0, certified=True).final
    value = abs(1 - u) ** 2 / (1 - abs(u) ** 2)
    expected = math.exp(-profile.beta)
    return Outcome(abs(value - expected) <= 1e-5, f"ratio {value:.12g}, e^(-beta t) = {expected:.12g}")


@verify_check("pr2.rate", "horocycle contraction rate e^(-t) for z - 1 on 50 pairs")
def _pr2_rate(seed: int) -> Outcome:
    profile = null_point_profile(corpus_map("gen.linear"))
    times = list(np.linspace(0.25, 2.5, 5))
    points = list(disk_samples(10, seed, r_max=0.95))
    rate = pr2_rate_check(profile, times, points, tol=0.0)
    return Outcome(rate.ok, f"{rate.n_pairs} pairs, min slack {rate.min_slack:.3e}",
                   None if rate.ok else rate.worst_z)


# Generators

@verify_check("gen.z2m1", "generator z^2 - 1: group of hyperbolic automorphisms")
def _gen_quadratic(seed: int) -> Outcome:
    report = _generator_report("gen.quadratic", seed)
    expected = {Verdict.IS_LFT, Verdict.IS_AUTOMORPHISM, Verdict.HYPERBOLIC_AUTO}
    passed = (expected <= report.verdicts and abs(report.m) <= 1e-6
              and _status_of(report, "col3.dfg") is Status.PASS)
    return Outcome(passed, f"m = {report.m:.3e}")


@verify_check("gen.zm1", "generator z - 1: affine semigroup and the m identity")
def _gen_linear(seed: int) -> Outcome:
    report = _generator_report("gen.linear", seed)
    gap = report.values["gap"]
    passed = (Verdict.IS_AFFINE in report.verdicts and _status_of(report, "col5") is Status.PASS
              and abs(report.m - 0.5) <= 1e-6 and abs(gap - 2 * report.m) <= 1e-6
              and _status_of(report, "rem6") is Status.PASS)
    return Outcome(passed, f"m = {report.m:.10g}, f'(1) - Re f''(1) = {gap:.10g}")


@verify_check("gen.cubic", "generator with cubic term: m = 1, f'''(1) = 6, not linear fractional")
def _gen_cubic(seed: int) -> Outcome:
    report = _generator_report("gen.cubic", seed)
    f3 = report.values["f3"]
    passed = (abs(report.m - 1) <= 1e-3 and abs(f3 - 6) <= 1e-6 and Verdict.IS_LFT not in report.verdicts)
    return Outcome(passed, f"m = {report.m:.6g}, f'''(1) = {f3:.10g}")


@verify_check("gen.parabolic", "generator -i(1 - z)^2: parabolic group")
def _gen_parabolic(seed: int) -> Outcome:
    report = _generator_report("gen.parabolic", seed)
    passed = Verdict.PARABOLIC_AUTO in report.verdicts and _status_of(report, "col3.dfg") is Status.PASS
    return Outcome(passed, f"verdicts {sorted(v.value for v in report.verdicts)}")


@verify_check("th5.iii.certified", "quadratic remainder bound, equality at z = 0")
def _remainder_certified(seed: int) -> Outcome:
    report = _generator_report("gen.cubic", seed)
    at_zero = report.values.get("th5.iii.z0", {"lhs": math.nan, "rhs": math.nan})
    status = _status_of(report, "th5.iii.certified")
    passed = (status is Status.PASS and abs(at_zero["lhs"] - 1) <= 1e-9 and abs(at_zero["rhs"] - 1) <= 1e-9)
    return Outcome(passed, f"LHS {at_zero['lhs']:.12g}, RHS {at_zero['rhs']:.12g}")


@verify_check("th5.iii.printed", "quadratic remainder bound, printed orientation")
def _remainder_printed(seed: int) -> Outcome:
    report = _generator_report("gen.cubic", seed)
    finding = _audit(report, "th5.iii.printed")
    if finding is None:
        return Outcome(False, "no audit finding")
    return Outcome(finding.certified_ok, finding.note, finding.witness, finding.printed_ok)


# Boundary identity

@verify_check("bk.identity", "identity passes the boundary identity test")
def _bk_identity(seed: int) -> Outcome:
    report = _bk_report("identity", seed)
    return Outcome(Verdict.IS_IDENTITY in report.verdicts, f"deviation {report.values['identity_deviation']:.2e}")


@verify_check("bk.mu", "z - 0.05(z - 1)^3: mu = 0.05")
def _bk_mu(seed: int) -> Outcome:
    report = _bk_report("bk", seed)
    mu = report.values["mu"]
    return Outcome(abs(mu - 0.05) <= 1e-6 and _status_of(report, "bk.mu") is Status.PASS, f"mu = {mu:.12g}")


@verify_check("bk.certified_bound", "z - 0.05(z - 1)^3: pointwise bound on 500 samples")
def _bk_bound(seed: int) -> Outcome:
    cert = _bk_report("bk", seed).certificate("col6.certified")
    if cert is None:
        return Outcome(False, "bound not evaluated")
    return Outcome(cert.status is Status.PASS, f"min slack {cert.value:.3e}", cert.witness)


@verify_check("bk.falsification", "no non-identity self-map with jet (1, 1, 0, 0) among 200 candidates")
def _bk_falsification(seed: int) -> Outcome:
    result = falsify_burns_krantz(200, seed)
    passed = not result.counterexamples and result.jet_matches >= 1
    return Outcome(passed, f"{result.self_maps} self-maps, {result.jet_matches} jet matches, "
                           f"{len(result.counterexamples)} counterexamples")


@verify_check("col6.printed", "boundary identity bound, printed orientation")
def _bk_printed(seed: int) -> Outcome:
    report = _bk_report("bk", seed)
    finding = _audit(report, "col6.printed")
    if finding is None:
        return Outcome(False, "no audit finding")
    return Outcome(finding.certified_ok, finding.note, finding.witness, finding.printed_ok)


# Boundary inequality audits

@verify_check("lem1.julia", "Julia-type lower bound on 20 Herglotz functions")
def _lem1(seed: int) -> Outcome:
    worst = math.inf
    for index, p in enumerate(herglotz_corpus(seed)):
        result = julia_bound_check(p, seed=seed + index)
        worst = min(worst, result.min_slack)
        if not result.ok:
            return Outcome(False, f"instance {index}: slack {result.min_slack:.3e}", result.counterexample)
    return Outcome(worst >= -1e-9, f"min slack {worst:.3e}")


@verify_check("lem2.certified", "reciprocal bound with factor 2 on its corpus")
def _lem2_certified(seed: int) -> Outcome:
    for text in RECIPROCAL_CORPUS:
        result = reciprocal_bound_check(parse_map(text), seed=seed)
        if not result.certified_ok:
            return Outcome(False, f"q = {text}", result.certified_witness)
    return Outcome(True, f"{len(RECIPROCAL_CORPUS)} functions")


@verify_check("lem2.printed", "reciprocal bound with factor 1 for q = 1 - z")
def _lem2_printed(seed: int) -> Outcome:
    result = reciprocal_bound_check(parse_map("1-z"), seed=seed)
    expected = (result.printed_witness is not None and abs(result.printed_witness - 0.5) <= 1e-12
                and abs(result.printed_lhs - 0.25) <= 1e-12 and abs(result.printed_rhs - 1 / 6) <= 1e-12)
    detail = "printed form holds" if result.printed_ok else (
        f"LHS {result.printed_lhs:.6g} > RHS {result.printed_rhs:.6g}")
    return Outcome(result.certified_ok and (result.printed_ok or expected), detail,
                   result.printed_witness, result.printed_ok)


@verify_check("lem3.decompose", "half-plane decomposition p = a C + b + gamma")
def _lem3(seed: int) -> Outcome:
    exact = halfplane_decompose(parse_map("2*cayley(z)+1"))
    shifted = halfplane_decompose(parse_map("1.5*cayley(z)+0.5+0.25i"))
    residual = halfplane_decompose(parse_map("cayley(z)+2+(1-z)^2"))
    passed = (exact.gamma_zero and abs(exact.a - 2) <= 1e-9 and abs(exact.b - 1) <= 1e-9
              and shifted.gamma_zero and abs(shifted.a - 1.5) <= 1e-9 and abs(shifted.b - (0.5 + 0.25j)) <= 1e-9
              and not residual.gamma_zero and abs(residual.a - 1) <= 1e-9 and abs(residual.b - 2) <= 1e-9)
    return Outcome(passed, f"a = {exact.a:.10g}, b = {exact.b:.10g}; residual witness {residual.witness}")


# Repelling fixed point and inclusion

@verify_check("rem3.k0", "repelling fixed point of z/(2 - z): invariant horocycle D(1, 1)")
def _rem3(seed: int) -> Outcome:
    report = repelling_analysis(as_mobius(corpus_map("repelling")))
    zeta, k0 = report.values.get("zeta", math.nan), report.values.get("k0", math.nan)
    passed = (abs(zeta) <= 1e-9 and abs(k0 - 1) <= 1e-9
              and all(cert.status is Status.PASS for cert in report.certificates))
    return Outcome(passed, f"zeta = {zeta:.3g}, k0 = {k0:.12g}")


@verify_check("inclusion", "image horocycle inside the conjugated bound on 50 seeded triples")
def _inclusion(seed: int) -> Outcome:
    rng = np.random.default_rng(seed)
    contained = equal = 0
    for index in range(50):
        alpha = 1.0 if index % 10 == 0 else float(rng.uniform(0.05, 1.0))
        f2 = alpha * (alpha - 1) + alpha**2 * complex(rng.random(), rng.normal())
        k = float(rng.uniform(0.1, 5.0))
        audit = inclusion_audit(alpha, f2, k)
        contained += audit.contained
        equal += audit.equal
    # both radii reduce to alpha^2 k/(alpha + k Re F''(1) + k alpha(1 - alpha)) for every alpha
    return Outcome(contained == 50, f"contained in {contained}/50, radii equal in {equal}/50")


# Self-maps and their generators

SELFMAP_GENERATOR_CORPUS = ("hyperbolic", "parabolic", "affine", "ex1")


@verify_check("rem5.generator", "z - F generates a semigroup; generator jet identities")
def _rem5(seed: int) -> Outcome:
    for name in SELFMAP_GENERATOR_CORPUS:
        report = _selfmap_generator_report(name)
        for condition_id in ("rem5", "lem5"):
            if _status_of(report, condition_id) is not Status.PASS:
                return Outcome(False, f"{condition_id} fails for {CORPUS[name]}")
    return Outcome(True, f"{len(SELFMAP_GENERATOR_CORPUS)} maps")


@verify_check("col4", "automorphisms and groups of generators; f'(1) = 2 exactly when parabolic")
def _col4(seed: int) -> Outcome:
    evaluated = 0
    for name in SELFMAP_GENERATOR_CORPUS:
        report = _selfmap_generator_report(name)
        for condition_id in ("col4", "col4.parabolic"):
            status = _status_of(report, condition_id)
            if not status.ok:
                return Outcome(False, f"{condition_id} fails for {CORPUS[name]}")
            evaluated += status is Status.PASS
    return Outcome(evaluated > 0, f"{evaluated} conditions evaluated")


@verify_check("lft.triangle", "LFT verdict, cross-ratio detection and quadratic generator agree")
def _lft_triangle(seed: int) -> Outcome:
    z = disk_samples(100, seed, r_max=0.95)
    for name in ("hyperbolic", "parabolic", "affine", "identity", "ex1", "bk"):
        F = corpus_map(name)
        analysed = Verdict.IS_LFT in _lft_report(name, seed).verdicts
        detected = detect_lft(F, seed).is_lft
        profile = selfmap_to_generator(F)
        beta, f2 = profile.beta, profile.jet.derivative(2)
        quadratic = beta * (z - 1) + f2 / 2 * (z - 1) ** 2
        generated = float(np.max(np.abs(evaluate(profile.f, z) - quadratic))) <= 1e-8
        if not analysed == detected == generated:
            return Outcome(False, f"{CORPUS[name]}: analysis {analysed}, detection {detected}, "
                                  f"generator {generated}")
    return Outcome(True, "6 maps")


@verify_check("pr1.classify", "automorphism subcase matches the Denjoy-Wolff classification")
def _pr1(seed: int) -> Outcome:
    pairs = (("hyperbolic", Verdict.HYPERBOLIC_AUTO, ClassificationKind.HYPERBOLIC),
             ("parabolic", Verdict.PARABOLIC_AUTO, ClassificationKind.PARABOLIC))
    for name, verdict, kind in pairs:
        report = _lft_report(name, seed)
        classification = denjoy_wolff(corpus_map(name))
        if verdict not in report.verdicts or classification.kind is not kind:
            return Outcome(False, f"{CORPUS[name]}: {classification.kind.value}")
    return Outcome(True, "hyperbolic and parabolic automorphisms")


# Building blocks

@verify_check("geometry.consistency", "membership agrees with the Euclidean form of D(tau, k)")
def _geometry(seed: int) -> Outcome:
    rng = np.random.default_rng(seed)
    for _ in range(40):
        tau = complex(np.exp(2j * np.pi * rng.random()))
        if rng.random() < 0.5:
            region = DiskRegion(tau * 0.9 * rng.random(), float(rng.uniform(1.2, 5.0)))
        else:
            region = DiskRegion(tau, float(rng.uniform(0.2, 5.0)))
        form = euclidean_form(region)
        for z in disk_samples(25, rng=rng, r_max=0.999):
            distance = abs(z - form.center) - form.radius
            if abs(distance) <= 1e-9:
                continue
            if contains(region, complex(z)).inside != (distance < 0):
                return Outcome(False, f"{region}", complex(z))
    return Outcome(True, "1000 points on 40 regions")


@verify_check("mobius.assoc", "composition of transformations is associative")
def _mobius(seed: int) -> Outcome:
    rng = np.random.default_rng(seed)
    z = disk_samples(16, rng=rng)
    for _ in range(50):
        A, B, C = (Mobius(*(rng.normal(size=4) + 1j * rng.normal(size=4))) for _ in range(3))
        if not ((A @ B) @ C).isclose(A @ (B @ C), 1e-9):
            return Outcome(False, f"{A}, {B}, {C}")
        with np.errstate(all="ignore"):
            direct, nested = (A @ B)(z), A(B(z))
        finite = np.isfinite(direct) & np.isfinite(nested)
        if np.any(np.abs(direct - nested)[finite] > 1e-8 * np.maximum(1.0, np.abs(direct[finite]))):
            return Outcome(False, f"evaluation mismatch for {A} and {B}")
    return Outcome(True, "50 triples")


def run_verification(seed: int = app_config.SEED, only: Optional[Sequence[str]] = None) -> List[VerifyRow]:
    """Runs the registered checks in order; an error inside a check fails its row."""
    rows: List[VerifyRow] = []
    for check in CHECKS:
        if only and check.row_id not in only:
            continue
        log_step(logger, f"[{check.row_id}] {check.topic}")
        try:
            outcome = check.run(seed)
        except DiskRigidityError as e:
            outcome = Outcome(False, f"{type(e).__name__}: {e}", getattr(e, "witness", None))
        printed = None if outcome.printed is None else (Status.PASS if outcome.printed else Status.FAIL)
        row = VerifyRow(check.row_id, check.topic, Status.PASS if outcome.passed else Status.FAIL,
                        printed, outcome.witness, outcome.detail)
        if outcome.passed:
            log_pass(logger, f"{check.row_id}: {outcome.detail}")
        else:
            log_fail(logger, f"{check.row_id}: {outcome.detail}")
        rows.append(row)
    return rows
