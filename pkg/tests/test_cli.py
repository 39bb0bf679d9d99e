import io
import json
import logging
import math

from pytest import approx, raises

from disk_rigidity import __version__
from disk_rigidity.analysis_manager import AnalysisManager
from disk_rigidity.cli import build_run_config, create_parser, main_cli
from disk_rigidity.logging_utils import ColorFormatter, logger

HYPERBOLIC = "(z+0.3)/(1+0.3*z)"


def exit_code_of(argv):
    with raises(SystemExit) as excinfo:
        main_cli(argv)
    return excinfo.value.code


def test_version(capsys):
    assert exit_code_of(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_build_run_config_defaults_and_parsing():
    args = create_parser().parse_args(["analyze", "--subject", "z", "--tau=-1", "--k-list", "0.5, 2",
                                       "--z0", "0.1+0.2i"])
    config = build_run_config(args)
    assert config.tau == -1
    assert config.k_list == [0.5, 2.0]
    assert config.z0 == approx(0.1 + 0.2j)
    assert config.role == "selfmap"
    assert not config.no_meta


def test_config_file_and_flag_precedence(tmp_path):
    config_file = tmp_path / "run.env"
    config_file.write_text(f'subject="{HYPERBOLIC}"\nk_list=1,3\nseed=5\ntol_verdict=1e-7\n', encoding="utf-8")
    args = create_parser().parse_args(["rigidity", "--config", str(config_file), "--seed", "9"])
    config = build_run_config(args)
    assert config.subject == HYPERBOLIC
    assert config.k_list == [1.0, 3.0]
    assert config.seed == 9
    assert config.verdict_tol == 1e-7


def test_bad_config_file_is_an_input_error(tmp_path):
    config_file = tmp_path / "run.env"
    config_file.write_text("colour=blue\n", encoding="utf-8")
    assert exit_code_of(["analyze", "--config", str(config_file)]) == 1


def test_analyze_exit_codes(tmp_path):
    assert exit_code_of(["analyze", "--subject", HYPERBOLIC, "--out", str(tmp_path / "a.json")]) == 0
    assert exit_code_of(["analyze", "--subject", "0.5*(z+1)+0.05*(z-1)^4",
                         "--out", str(tmp_path / "b.json")]) == 2
    assert exit_code_of(["analyze", "--subject", "z+"]) == 1
    assert exit_code_of(["analyze", "--subject", "2*z"]) == 1


def test_input_error_is_logged_once(monkeypatch):
    stream = io.StringIO()
    handler = logging.StreamHandler(stream)
    handler.setFormatter(ColorFormatter())
    monkeypatch.setattr(logger, "handlers", [handler])
    assert exit_code_of(["analyze", "--subject", "2*z"]) == 1
    errors = [line for line in stream.getvalue().splitlines() if "Error:" in line]
    assert len(errors) == 1
    assert "Error: Error:" not in errors[0]


def test_unexpected_errors_exit_with_internal_code(monkeypatch):
    def crash(self):
        raise RuntimeError("boom")

    monkeypatch.setattr(AnalysisManager, "analyze", crash)
    assert exit_code_of(["analyze", "--subject", "z"]) == 4


def test_classify_to_stdout(capsys, validate_document):
    assert exit_code_of(["classify", "--subject", HYPERBOLIC, "--no-meta", "-q"]) == 0
    document = validate_document(json.loads(capsys.readouterr().out))
    assert document["command"] == "classify"
    assert document["classification"]["kind"] == "Hyperbolic"
    assert document["classification"]["multiplier"]["re"] == approx(7 / 13)


def test_no_meta_output_is_reproducible(tmp_path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    for out in (first, second):
        assert exit_code_of(["rigidity", "--subject", HYPERBOLIC, "--no-meta", "--out", str(out)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert "meta" not in json.loads(first.read_text(encoding="utf-8"))


def test_flow_csv_to_stdout(capsys):
    assert exit_code_of(["flow", "--subject", "z-1", "--role", "generator", "--t-end", repr(math.log(2))]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "t,re,im"
    assert float(lines[-1].split(",")[1]) == approx(0.5, abs=1e-9)


def test_flow_of_selfmap_is_an_input_error():
    assert exit_code_of(["flow", "--subject", "z-1"]) == 1
