# file: src/disk_rigidity/models.py
"""Data models for the disk rigidity toolkit."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

import numpy as np

from . import config as app_config
from .exceptions import ConfigurationError, RegionError

if TYPE_CHECKING:
    from .expressions import MapExpr


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    VACUOUS = "vacuous"
    SKIPPED = "skipped"

    @property
    def ok(self) -> bool:
        return self in (Status.PASS, Status.VACUOUS, Status.SKIPPED)


class Verdict(str, Enum):
    IS_LFT = "IsLFT"
    IS_AUTOMORPHISM = "IsAutomorphism"
    IS_AFFINE = "IsAffine"
    IS_IDENTITY = "IsIdentity"
    HYPERBOLIC_AUTO = "HyperbolicAuto"
    PARABOLIC_AUTO = "ParabolicAuto"


class ClassificationKind(str, Enum):
    DILATION = "Dilation"
    HYPERBOLIC = "Hyperbolic"
    PARABOLIC = "Parabolic"
    ELLIPTIC_AUTOMORPHISM = "EllipticAutomorphism"
    IDENTITY = "Identity"


@dataclass(frozen=True)
class BoundaryJet:
    """
    Taylor data a_0..a_m of a map at a boundary point tau, a_k = g^(k)(tau)/k!.
    ``method`` records which route produced the coefficients.
    """

    tau: complex
    coeffs: Tuple[complex, ...]
    residual_ok: bool = True
    method: str = "symbolic"

    def __post_init__(self) -> None:
        if abs(abs(self.tau) - 1.0) > 1e-12:
            raise ValueError(f"Jet base point {self.tau} is not on the unit circle.")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def derivative(self, k: int) -> complex:
        """k-th angular derivative g^(k)(tau)."""
        if k > self.order:
            raise IndexError(f"Jet of order {self.order} has no derivative of order {k}.")
        return self.coeffs[k] * math.factorial(k)

    def matches(self, values: Tuple[complex, ...], tol: float) -> bool:
        """True when the leading coefficients agree with ``values`` to ``tol``."""
        return all(abs(c - v) <= tol for c, v in zip(self.coeffs, values))


@dataclass(frozen=True)
class StolzProbe:
    """Radial ladder r_j = 1 - 2^-j toward tau, inside the Stolz angle of aperture k."""

    tau: complex = 1.0 + 0j
    k: float = app_config.STOLZ_APERTURE
    ladder_min: int = app_config.LADDER_MIN
    ladder_max: int = app_config.LADDER_MAX

    def __post_init__(self) -> None:
        if not self.k > 1:
            raise ValueError(f"Stolz aperture must exceed 1, got {self.k}.")
        if abs(abs(self.tau) - 1.0) > 1e-12:
            raise ValueError(f"Probe base point {self.tau} is not on the unit circle.")

    def steps(self) -> np.ndarray:
        return 2.0 ** -np.arange(self.ladder_min, self.ladder_max + 1, dtype=float)

    @property
    def ray_angle(self) -> float:
        """Half of the largest angle a ray at tau can make with the radius and stay in the region."""
        return 0.5 * math.acos(1.0 / self.k)

    def points(self, direction: int = 0) -> np.ndarray:
        """Ladder points; direction -1/+1 tilts the ray off the radius by ray_angle."""
        h = self.steps()
        tilt = np.exp(1j * direction * self.ray_angle)
        return self.tau * (1.0 - h * tilt)


@dataclass(frozen=True)
class AngularLimit:
    value: complex
    rung: int
    error: float = 0.0
    ray_values: Tuple[complex, ...] = ()
    nontangential: bool = True


@dataclass(frozen=True)
class ChargeResult:
    delta: float
    converged: bool
    tail_estimate: float


@dataclass(frozen=True)
class JuliaBoundReport:
    delta: float
    min_slack: float
    ok: bool
    counterexample: Optional[complex] = None


@dataclass(frozen=True)
class ReciprocalBoundReport:
    k: float
    certified_ok: bool
    printed_ok: bool
    certified_min_slack: float
    printed_min_slack: float
    printed_witness: Optional[complex] = None
    printed_lhs: Optional[float] = None
    printed_rhs: Optional[float] = None
    certified_witness: Optional[complex] = None
    identically_zero: bool = False


@dataclass(frozen=True)
class HalfPlaneDecomposition:
    a: float
    b: complex
    gamma_zero: bool
    witness: Optional[complex] = None
    residual: float = 0.0


@dataclass(frozen=True)
class DiskRegion:
    """
    The set D(tau, k): a horocycle when |tau| = 1, a pseudo-hyperbolic disk when
    |tau| < 1. ``k = inf`` stands for the whole disk.
    """

    tau: complex
    k: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", complex(self.tau))
        if abs(self.tau) > 1.0 + 1e-12:
            raise RegionError(f"Region center {self.tau} lies outside the closed disk.")
        if not self.k > 1.0 - abs(self.tau) ** 2:
            raise RegionError(
                f"Inadmissible region D({self.tau}, {self.k}): need k > 1 - |tau|^2."
            )

    @classmethod
    def whole_disk(cls, tau: complex = 1.0) -> "DiskRegion":
        return cls(tau, math.inf)

    @property
    def is_whole_disk(self) -> bool:
        return math.isinf(self.k)

    @property
    def is_horocycle(self) -> bool:
        return abs(abs(self.tau) - 1.0) <= 1e-12

    def __str__(self) -> str:
        return "Δ" if self.is_whole_disk else f"D({self.tau:.6g}, {self.k:.10g})"


@dataclass(frozen=True)
class EuclideanForm:
    center: complex
    radius: float
    pseudo_radius: Optional[float] = None


@dataclass(frozen=True)
class Membership:
    inside: bool
    margin: float


@dataclass(frozen=True)
class InclusionVerdict:
    ok: bool
    min_margin: float
    witness: Optional[complex] = None
    witness_ratio: Optional[float] = None
    worst: Optional[complex] = None
    worst_ratio: Optional[float] = None
    n_checked: int = 0


@dataclass(frozen=True)
class InclusionAudit:
    """Two horocycles at 1 built from (alpha, F''(1), k): the image bound and the conjugated bound."""

    alpha: float
    f2: complex
    k: float
    k_image: float
    k_bound: float
    contained: bool
    equal: bool


@dataclass(frozen=True)
class SelfMapCheck:
    ok: bool
    max_modulus: float
    witness: complex


@dataclass(frozen=True)
class FixedPoint:
    point: complex
    multiplicity: int = 1


@dataclass
class Classification:
    kind: ClassificationKind
    tau_dw: complex
    multiplier: complex
    iterations: int = 0
    details: Dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        return f"{self.kind.value} at {self.tau_dw:.10g} (multiplier {self.multiplier:.10g})"


@dataclass
class GeneratorProfile:
    """A generator with boundary null point tau and its Berkson-Porta data."""

    f: "MapExpr"
    tau: complex
    beta: float
    jet: BoundaryJet
    p: "MapExpr"
    m: float
    m_uncertainty: float = 0.0
    certified: bool = False
    details: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class RateReport:
    """Horocycle contraction |1-F_t|^2/(1-|F_t|^2) <= e^{-t beta} |1-z|^2/(1-|z|^2) over (t, z) pairs."""

    beta: float
    ok: bool
    min_slack: float
    worst_t: float
    worst_z: complex
    n_pairs: int


@dataclass
class Trajectory:
    z0: complex
    samples: List[Tuple[float, complex]] = field(default_factory=list)
    tol: float = app_config.ODE_TOL
    max_step: float = app_config.ODE_MAX_STEP
    rejected_steps: int = 0

    @property
    def final(self) -> complex:
        return self.samples[-1][1]

    @property
    def t_end(self) -> float:
        return self.samples[-1][0]


@dataclass
class Certificate:
    """One checked condition: a stable id, a status and, on failure, a witness."""

    condition_id: str
    status: Status
    witness: Optional[complex] = None
    value: Optional[float] = None
    detail: str = ""
    k: Optional[float] = None

    def __str__(self) -> str:
        text = f"{self.condition_id}: {self.status.value}"
        if self.witness is not None:
            text += f", witness {self.witness:.6g}"
        return text


@dataclass
class AuditFinding:
    """A printed-versus-certified comparison of one displayed inequality."""

    condition_id: str
    certified_ok: bool
    printed_ok: bool
    witness: Optional[complex] = None
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    note: str = ""


_IMPLIED = {
    Verdict.IS_IDENTITY: (Verdict.IS_AFFINE,),
    Verdict.IS_AFFINE: (Verdict.IS_LFT,),
    Verdict.IS_AUTOMORPHISM: (Verdict.IS_LFT,),
    Verdict.HYPERBOLIC_AUTO: (Verdict.IS_AUTOMORPHISM,),
    Verdict.PARABOLIC_AUTO: (Verdict.IS_AUTOMORPHISM,),
}


@dataclass
class RigidityReport:
    subject: str
    role: str = "selfmap"
    jet: Optional[BoundaryJet] = None
    alpha: Optional[float] = None
    a: Optional[complex] = None
    a_lambda: Dict[float, complex] = field(default_factory=dict)
    schwarzian: Optional[complex] = None
    m: Optional[float] = None
    verdicts: set = field(default_factory=set)
    certificates: List[Certificate] = field(default_factory=list)
    audit: List[AuditFinding] = field(default_factory=list)
    values: Dict[str, Any] = field(default_factory=dict)

    def add_verdict(self, verdict: Verdict) -> None:
        """Adds a verdict together with everything it implies."""
        pending = [verdict]
        while pending:
            current = pending.pop()
            if current not in self.verdicts:
                self.verdicts.add(current)
                pending.extend(_IMPLIED.get(current, ()))

    def certify(self, condition_id: str, passed: bool, witness: Optional[complex] = None,
                value: Optional[float] = None, detail: str = "", k: Optional[float] = None) -> Certificate:
        cert = Certificate(condition_id, Status.PASS if passed else Status.FAIL,
                           None if passed else witness, value, detail, k)
        self.certificates.append(cert)
        return cert

    def record(self, cert: Certificate) -> Certificate:
        self.certificates.append(cert)
        return cert

    def certificate(self, condition_id: str) -> Optional[Certificate]:
        for cert in self.certificates:
            if cert.condition_id == condition_id:
                return cert
        return None

    def failed(self) -> List[Certificate]:
        return [c for c in self.certificates if c.status is Status.FAIL]

    def merge(self, other: "RigidityReport") -> None:
        for verdict in other.verdicts:
            self.add_verdict(verdict)
        self.certificates.extend(other.certificates)
        self.audit.extend(other.audit)
        self.a_lambda.update(other.a_lambda)
        self.values.update(other.values)
        for name in ("jet", "alpha", "a", "schwarzian", "m"):
            if getattr(self, name) is None:
                setattr(self, name, getattr(other, name))


@dataclass
class VerifyRow:
    row_id: str
    topic: str
    certified: Status
    printed: Optional[Status] = None
    witness: Optional[complex] = None
    detail: str = ""


@dataclass
class RunConfig:
    """Everything one CLI invocation needs."""

    subject: Optional[str] = None
    role: str = "selfmap"
    tau: complex = 1.0 + 0j
    k_list: List[float] = field(default_factory=list)
    seed: int = app_config.SEED
    jet_tol: float = app_config.JET_TOL
    ode_tol: float = app_config.ODE_TOL
    verdict_tol: float = app_config.VERDICT_TOL
    samples: int = app_config.INCLUSION_SAMPLES
    out: Optional[str] = None
    z0: complex = 0j
    t_end: float = 1.0
    no_meta: bool = False

    def __post_init__(self) -> None:
        for name in ("jet_tol", "ode_tol", "verdict_tol"):
            if not getattr(self, name) > 0:
                raise ConfigurationError(f"Tolerance {name} must be positive.")
        if self.role not in app_config.ROLES:
            raise ConfigurationError(f"Unknown role '{self.role}', expected one of {app_config.ROLES}.")
        if abs(abs(self.tau) - 1.0) > 1e-12:
            raise ConfigurationError(f"tau = {self.tau} is not a unimodular point.")
        if self.samples < 1:
            raise ConfigurationError("Sample count must be positive.")
        if any(not k > 0 for k in self.k_list):
            raise ConfigurationError(f"Horocycle parameters must be positive, got {self.k_list}.")
