import json
import math

from pytest import approx, fixture, raises

from disk_rigidity import analysis_manager
from disk_rigidity import config as app_config
from disk_rigidity.analysis_manager import AnalysisManager
from disk_rigidity.exceptions import ConfigurationError, InputClassError, UndeterminedClassificationError
from disk_rigidity.models import RunConfig
from disk_rigidity.reporting import EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK
from disk_rigidity.verification import run_verification


@fixture
def run(tmp_path):
    """Runs one manager command and returns (exit code, path of the written output)."""
    def _run(command, **options):
        out = tmp_path / f"{command}.out"
        manager = AnalysisManager(RunConfig(out=str(out), no_meta=True, **options))
        return getattr(manager, command)(), out
    return _run


def load(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_jet_tolerance_stays_with_the_run(run):
    default = app_config.JET_TOL
    code, out = run("rigidity", subject="(z+0.3)/(1+0.3*z)", jet_tol=1e-9)
    assert code == EXIT_OK
    assert load(out)["config"]["tol_jet"] == 1e-9
    assert app_config.JET_TOL == default
    assert AnalysisManager(RunConfig(subject="z")).config.jet_tol == default


def test_analyze_runs_every_rigidity_check(run):
    subject = "(z+0.3)/(1+0.3*z)"
    _, rigidity_out = run("rigidity", subject=subject)
    _, analyze_out = run("analyze", subject=subject)
    rigidity_ids = {cert["id"] for cert in load(rigidity_out)["report"]["certificates"]}
    analyze_ids = {cert["id"] for cert in load(analyze_out)["report"]["certificates"]}
    assert {"rem5", "lem5", "col4"} <= rigidity_ids <= analyze_ids


def test_missing_subject():
    with raises(ConfigurationError):
        AnalysisManager(RunConfig()).analyze()


def test_analyze_hyperbolic_automorphism(run, validate_document):
    code, out = run("analyze", subject="(z+0.3)/(1+0.3*z)", k_list=[1.0])
    assert code == EXIT_OK
    document = validate_document(load(out))
    assert "meta" not in document
    assert document["config"]["k_list"] == [1.0]
    assert "HyperbolicAuto" in document["report"]["verdicts"]
    assert document["report"]["alpha"] == approx(7 / 13)


def test_analyze_quartic_perturbation_fails(run, validate_document):
    code, out = run("analyze", subject="0.5*(z+1)+0.05*(z-1)^4")
    assert code == EXIT_FAILED
    assert validate_document(load(out))["report"]["status"] == "fail"


def test_analyze_identity(run):
    code, out = run("analyze", subject="z")
    assert code == EXIT_OK
    assert "IsIdentity" in load(out)["report"]["verdicts"]


def test_rigidity_at_rotated_boundary_point(run):
    code, out = run("rigidity", subject="(z-0.3)/(1-0.3*z)", tau=-1 + 0j)
    assert code == EXIT_OK
    report = load(out)["report"]
    assert report["alpha"] == approx(7 / 13)
    assert report["subject"] == "(z-0.3)/(1-0.3*z)"


def test_rigidity_of_generator(run, validate_document):
    code, out = run("rigidity", subject="z^2-1", role="generator")
    assert code == EXIT_OK
    report = validate_document(load(out))["report"]
    assert report["role"] == "generator"
    assert report["values"]["m_certified"] is True


def test_classify(run, validate_document):
    code, out = run("classify", subject="(z+0.3)/(1+0.3*z)")
    assert code == EXIT_OK
    classification = validate_document(load(out))["classification"]
    assert classification["kind"] == "Hyperbolic"
    assert classification["multiplier"]["re"] == approx(7 / 13)


def test_classify_undetermined(run, monkeypatch, validate_document):
    def undetermined(F, **options):
        raise UndeterminedClassificationError("no limit", {"iterations": 10})

    monkeypatch.setattr(analysis_manager, "denjoy_wolff", undetermined)
    code, out = run("classify", subject="0.5*z")
    assert code == EXIT_INCONCLUSIVE
    document = validate_document(load(out))
    assert document["classification"] is None
    assert document["diagnostics"] == {"iterations": 10}


def test_flow_writes_csv(run):
    code, out = run("flow", subject="z-1", role="generator", t_end=math.log(2))
    assert code == EXIT_OK
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "t,re,im"
    t, re, im = map(float, lines[-1].split(","))
    assert t == approx(math.log(2))
    assert re == approx(0.5, abs=1e-9)
    assert im == approx(0, abs=1e-12)


def test_flow_needs_generator(run):
    with raises(InputClassError):
        run("flow", subject="z-1")
    with raises(ConfigurationError):
        run("flow", subject="z-1", role="generator", t_end=-1.0)


def test_decompose_generator(run, validate_document):
    code, out = run("decompose", subject="z-1", role="generator")
    assert code == EXIT_OK
    decomposition = validate_document(load(out))["decomposition"]
    assert decomposition["is_generator"] is True
    assert decomposition["tau"]["re"] == approx(1)
    assert "halfplane" in decomposition


def test_decompose_selfmap(run):
    code, out = run("decompose", subject="(z+0.3)/(1+0.3*z)")
    assert code == EXIT_OK
    decomposition = load(out)["decomposition"]
    assert decomposition["profile"]["beta"] == approx(26 / 7)
    assert decomposition["difference"]["is_generator"] is True


def test_verify(run, monkeypatch, capsys, validate_document):
    monkeypatch.setattr(analysis_manager, "run_verification",
                        lambda seed: run_verification(seed, only=["ex1.jet", "lem2.printed"]))
    code, out = run("verify")
    assert code == EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1] == "2/2 certified checks passed"
    rows = validate_document(load(out))["rows"]
    assert [row["id"] for row in rows] == ["ex1.jet", "lem2.printed"]
    assert rows[1]["printed"] == "fail"
