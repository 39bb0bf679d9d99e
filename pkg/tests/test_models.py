import math

from pytest import approx, mark, raises

from disk_rigidity.exceptions import ConfigurationError, RegionError
from disk_rigidity.models import (
    BoundaryJet, DiskRegion, RigidityReport, RunConfig, Status, StolzProbe, Verdict,
)


def test_status_ok():
    assert {s for s in Status if s.ok} == {Status.PASS, Status.VACUOUS, Status.SKIPPED}


@mark.parametrize("verdict expected".split(),
                  ((Verdict.HYPERBOLIC_AUTO, {Verdict.HYPERBOLIC_AUTO, Verdict.IS_AUTOMORPHISM, Verdict.IS_LFT}),
                   (Verdict.IS_IDENTITY, {Verdict.IS_IDENTITY, Verdict.IS_AFFINE, Verdict.IS_LFT}),
                   (Verdict.IS_LFT, {Verdict.IS_LFT})))
def test_verdicts_close_under_implication(verdict, expected):
    report = RigidityReport(subject="z")
    report.add_verdict(verdict)
    assert report.verdicts == expected


def test_certify_keeps_witness_only_on_failure():
    report = RigidityReport(subject="z")
    passed = report.certify("a", True, witness=0.5)
    failed = report.certify("b", False, witness=0.5j)
    assert passed.witness is None and passed.status is Status.PASS
    assert failed.witness == 0.5j and failed.status is Status.FAIL
    assert report.failed() == [failed]
    assert report.certificate("b") is failed
    assert report.certificate("c") is None


def test_merge_fills_missing_fields():
    first = RigidityReport(subject="z", alpha=0.5)
    second = RigidityReport(subject="z", alpha=2.0, a=1j)
    second.add_verdict(Verdict.IS_AFFINE)
    second.certify("x", True)
    second.values["k0"] = 1.0
    first.merge(second)
    assert first.alpha == 0.5
    assert first.a == 1j
    assert Verdict.IS_LFT in first.verdicts
    assert [c.condition_id for c in first.certificates] == ["x"]
    assert first.values == {"k0": 1.0}


def test_boundary_jet():
    jet = BoundaryJet(1.0, (1, 0.5, 2, 1))
    assert jet.order == 3
    assert jet.derivative(2) == 4
    assert jet.derivative(3) == 6
    assert jet.matches((1, 0.5, 2), 1e-12)
    assert not jet.matches((1, 0.4), 1e-3)
    with raises(IndexError):
        jet.derivative(4)
    with raises(ValueError):
        BoundaryJet(0.5, (1,))


def test_stolz_probe_points_approach_tau():
    probe = StolzProbe(tau=1j)
    points = probe.points()
    assert abs(points[-1] - 1j) < 1e-11
    assert all(abs(p) < 1 for p in probe.points(1))
    with raises(ValueError):
        StolzProbe(k=1.0)


def test_disk_region_admissibility():
    assert DiskRegion.whole_disk().is_whole_disk
    assert DiskRegion(1j, 0.1).is_horocycle
    assert not DiskRegion(0, 2).is_horocycle
    with raises(RegionError):
        DiskRegion(0.5, 0.5)
    with raises(RegionError):
        DiskRegion(2, 1)
    assert str(DiskRegion.whole_disk()) == "Δ"


def test_run_config_defaults():
    config = RunConfig()
    assert config.tau == 1
    assert config.role == "selfmap"
    assert math.isfinite(config.jet_tol)
    assert config.t_end == approx(1.0)


@mark.parametrize("kwargs", ({"tau": 0.5}, {"samples": 0}, {"k_list": [1.0, 0.0]},
                             {"role": "flow"}, {"jet_tol": 0.0}, {"verdict_tol": -1.0}))
def test_run_config_rejects(kwargs):
    with raises(ConfigurationError):
        RunConfig(**kwargs)
