# file: src/disk_rigidity/analysis_manager.py
"""
Core class running one CLI subcommand for a RunConfig.
"""

from typing import Any, Dict, Optional

from .boundary import halfplane_decompose
from .dynamics import (
    certify_generator, classify_generator, denjoy_wolff, flow, null_point_profile, selfmap_to_generator,
    trajectory_to_csv,
)
from .exceptions import ConfigurationError, InputClassError, UndeterminedClassificationError
from .expressions import Const, MapExpr, Z, compose, mul, sub, to_text
from .holomap import as_mobius, validate_map
from .logging_utils import log_fail, log_note, log_pass, log_step, logger
from .models import RigidityReport, RunConfig, Verdict
from .parser import parse_map
from .reporting import (
    EXIT_INCONCLUSIVE, EXIT_OK, build_document, dumps, exit_code, format_verify_table, report_to_dict,
    to_jsonable, verify_exit_code, verify_row_to_dict, write_output,
)
from .rigidity import (
    burns_krantz, generator_rigidity, lft_analysis, quantitative_bounds, repelling_analysis,
    selfmap_generator_checks,
)
from .verification import run_verification


class AnalysisManager:
    """
    Parses the subject of a run, dispatches it to the analyzers of a
    subcommand and writes the resulting document. Every public method
    returns the process exit code.
    """

    def __init__(self, config: RunConfig) -> None:
        self.config = config
        self._subject: Optional[MapExpr] = None

    @property
    def subject(self) -> MapExpr:
        if self._subject is None:
            if not self.config.subject:
                raise ConfigurationError("No subject given: use --subject or 'subject=' in a config file.")
            expr = parse_map(self.config.subject)
            validate_map(expr)
            logger.info(f"Subject ({self.config.role}): {to_text(expr)}")
            self._subject = expr
        return self._subject

    def _at_one(self, expr: MapExpr) -> MapExpr:
        """conj(tau) g(tau z): moves the boundary point tau to 1."""
        tau = self.config.tau
        if abs(tau - 1) <= 1e-15:
            return expr
        log_note(logger, f"Rotating the boundary point {tau} to 1")
        return compose(mul(Const(tau.conjugate()), Z), compose(expr, mul(Const(tau), Z)))

    def _config_dict(self) -> Dict[str, Any]:
        c = self.config
        return {
            "subject": c.subject, "role": c.role, "tau": c.tau, "k_list": list(c.k_list),
            "seed": c.seed, "tol_jet": c.jet_tol, "tol_ode": c.ode_tol, "tol_verdict": c.verdict_tol,
            "samples": c.samples,
        }

    def _emit(self, command: str, payload: Dict[str, Any], code: int) -> int:
        document = build_document(command, {"config": self._config_dict(), **payload}, code,
                                  self.config.no_meta, self.config.seed)
        write_output(dumps(document), self.config.out)
        return code

    def _finish(self, command: str, report: RigidityReport) -> int:
        code = exit_code(report.certificates)
        failed = report.failed()
        if failed:
            log_fail(logger, f"{len(failed)} certified condition(s) failed: "
                             f"{', '.join(c.condition_id for c in failed)}")
        else:
            log_pass(logger, f"Verdicts: {', '.join(sorted(v.value for v in report.verdicts)) or 'none'}")
        return self._emit(command, {"report": report_to_dict(report)}, code)

    # Self-maps

    def _selfmap_rigidity(self, with_bounds: bool) -> RigidityReport:
        c = self.config
        F = self._at_one(self.subject)
        report = lft_analysis(F, c.k_list, c.samples, c.seed, c.verdict_tol, c.jet_tol)
        report.subject = c.subject
        if report.jet is not None and report.jet.matches((1, 1, 0), c.jet_tol):
            report.merge(burns_krantz(F, seed=c.seed, tol=c.verdict_tol, jet_tol=c.jet_tol))
        if with_bounds:
            report.merge(quantitative_bounds(F, c.samples, c.seed, c.verdict_tol, c.jet_tol))
        mobius = as_mobius(F)
        if mobius is not None and report.alpha is not None and report.alpha > 1 + c.verdict_tol:
            report.merge(repelling_analysis(mobius))
        if Verdict.IS_IDENTITY not in report.verdicts:
            report.merge(selfmap_generator_checks(F, c.verdict_tol, c.jet_tol))
        return report

    def _generator_rigidity(self) -> RigidityReport:
        c = self.config
        f = self._at_one(self.subject)
        profile = null_point_profile(f, c.jet_tol)
        report = generator_rigidity(profile, c.seed, tol=c.verdict_tol, jet_tol=c.jet_tol)
        report.subject = self.config.subject
        report.values["m_certified"] = profile.certified
        return report

    def analyze(self) -> int:
        """All analyzers for the subject's role, quantitative bounds included."""
        log_step(logger, f"Analyzing {self.config.subject}")
        if self.config.role == "generator":
            return self._finish("analyze", self._generator_rigidity())
        return self._finish("analyze", self._selfmap_rigidity(with_bounds=True))

    def rigidity(self) -> int:
        """Rigidity analyzers only."""
        log_step(logger, f"Rigidity checks for {self.config.subject}")
        if self.config.role == "generator":
            return self._finish("rigidity", self._generator_rigidity())
        return self._finish("rigidity", self._selfmap_rigidity(with_bounds=False))

    def classify(self) -> int:
        log_step(logger, f"Classifying {self.config.subject}")
        try:
            if self.config.role == "generator":
                classification = classify_generator(self.subject, jet_tol=self.config.jet_tol)
            else:
                classification = denjoy_wolff(self.subject, jet_tol=self.config.jet_tol)
        except UndeterminedClassificationError as e:
            log_note(logger, str(e))
            payload = {"classification": None, "diagnostics": to_jsonable(e.diagnostics), "message": str(e)}
            return self._emit("classify", payload, EXIT_INCONCLUSIVE)
        log_pass(logger, str(classification))
        return self._emit("classify", {"classification": to_jsonable(classification)}, EXIT_OK)

    def flow(self) -> int:
        """Integrates the semigroup of a generator and writes the trajectory as CSV."""
        c = self.config
        if c.role != "generator":
            raise InputClassError("flow needs a generator (--role generator)")
        if c.t_end < 0:
            raise ConfigurationError(f"t_end must be nonnegative, got {c.t_end}")
        log_step(logger, f"Flow of {c.subject} from {c.z0} up to t = {c.t_end}")
        trajectory = flow(self.subject, c.z0, c.t_end, c.ode_tol)
        logger.info(f"{len(trajectory.samples)} samples, {trajectory.rejected_steps} rejected steps, "
                    f"final point {trajectory.final:.12g}")
        write_output(trajectory_to_csv(trajectory), c.out)
        return EXIT_OK

    def decompose(self) -> int:
        """Berkson-Porta data of a generator, or of the generator attached to a self-map."""
        log_step(logger, f"Decomposing {self.config.subject}")
        if self.config.role == "generator":
            payload = self._generator_decomposition(self.subject)
        else:
            F = self._at_one(self.subject)
            profile = selfmap_to_generator(F, self.config.jet_tol)
            details = {key: value for key, value in profile.details.items() if key != "selfmap_jet"}
            payload = {
                "profile": {
                    "f": profile.f, "beta": profile.beta, "m": profile.m,
                    "m_uncertainty": profile.m_uncertainty, "certified": profile.certified,
                    "jet": profile.jet, "p": profile.p, "details": details,
                },
                "difference": self._generator_decomposition(sub(Z, F)),
            }
        return self._emit("decompose", {"decomposition": to_jsonable(payload)}, EXIT_OK)

    def _generator_decomposition(self, f: MapExpr) -> Dict[str, Any]:
        certificate = certify_generator(f, self.config.jet_tol)
        result: Dict[str, Any] = {
            "tau": certificate.tau, "p": certificate.p, "is_generator": certificate.is_generator,
        }
        tau = certificate.tau
        if abs(abs(tau) - 1) <= 1e-12:
            p_at_one = certificate.p if abs(tau - 1) <= 1e-15 else compose(certificate.p, mul(Const(tau), Z))
            try:
                result["halfplane"] = halfplane_decompose(p_at_one, self.config.jet_tol)
            except InputClassError as e:
                log_note(logger, f"No half-plane decomposition: {e}")
                result["halfplane"] = None
                result["halfplane_error"] = str(e)
        return result

    def verify(self) -> int:
        """Runs the built-in verify suite; the table goes to stdout, JSON to --out."""
        log_step(logger, "Running the verify suite")
        rows = run_verification(self.config.seed)
        code = verify_exit_code(rows)
        print(format_verify_table(rows), end="")
        if self.config.out is not None:
            document = build_document("verify", {"rows": [verify_row_to_dict(row) for row in rows]}, code,
                                      self.config.no_meta, self.config.seed)
            write_output(dumps(document), self.config.out)
        return code
