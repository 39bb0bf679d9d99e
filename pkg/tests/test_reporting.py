import json
import math

import numpy as np
from pytest import mark, raises

from disk_rigidity import __version__
from disk_rigidity import config as app_config
from disk_rigidity.exceptions import ConfigurationError
from disk_rigidity.mobius import Mobius
from disk_rigidity.models import Certificate, Status, VerifyRow
from disk_rigidity.parser import parse_map
from disk_rigidity.reporting import (
    EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK, TOOL_NAME, build_document, dumps, exit_code, format_verify_table,
    report_to_dict, to_jsonable, verify_exit_code, write_output,
)
from disk_rigidity.rigidity import lft_analysis


@mark.parametrize("statuses code".split(),
                  (([], EXIT_OK),
                   ([Status.PASS, Status.VACUOUS, Status.SKIPPED], EXIT_OK),
                   ([Status.PASS, Status.INCONCLUSIVE], EXIT_INCONCLUSIVE),
                   ([Status.INCONCLUSIVE, Status.FAIL, Status.PASS], EXIT_FAILED)))
def test_exit_code(statuses, code):
    assert exit_code(Certificate(f"c{i}", status) for i, status in enumerate(statuses)) == code


def test_verify_exit_code():
    rows = [VerifyRow("a", "t", Status.PASS, Status.FAIL), VerifyRow("b", "t", Status.SKIPPED)]
    assert verify_exit_code(rows) == EXIT_OK
    rows.append(VerifyRow("c", "t", Status.FAIL))
    assert verify_exit_code(rows) == EXIT_FAILED


def test_to_jsonable_scalars():
    assert to_jsonable(1.5 - 2j) == {"re": 1.5, "im": -2.0}
    assert to_jsonable(math.inf) == "inf"
    assert to_jsonable(-math.inf) == "-inf"
    assert to_jsonable(math.nan) == "nan"
    assert to_jsonable(Status.VACUOUS) == "vacuous"
    assert to_jsonable(np.float64(0.25)) == 0.25
    assert to_jsonable(np.bool_(True)) is True
    assert to_jsonable(None) is None


def test_to_jsonable_containers():
    assert to_jsonable(np.array([1.0, 2.0])) == [1.0, 2.0]
    assert to_jsonable({1.0: 2j, Status.PASS: (1, 2)}) == {"1": {"re": 0.0, "im": 2.0}, "pass": [1, 2]}
    assert to_jsonable({"b", "a"}) == ["a", "b"]
    expr = parse_map("z^2+1")
    assert to_jsonable(expr) == str(expr)
    assert to_jsonable(Mobius(1, 0.3, 0.3, 1))[1] == {"re": 0.3, "im": 0.0}
    with raises(TypeError):
        to_jsonable(object())


def test_build_document():
    document = build_document("analyze", {"report": None}, EXIT_FAILED, seed=7)
    assert document["tool"] == TOOL_NAME
    assert document["version"] == __version__
    assert document["exit_code"] == EXIT_FAILED
    assert document["meta"]["seed"] == 7
    assert "generated" in document["meta"]
    assert "meta" not in build_document("analyze", {}, EXIT_OK, no_meta=True)


def test_dumps_is_sorted_with_trailing_newline():
    text = dumps({"b": 1j, "a": math.inf})
    assert text.endswith("}\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": "inf", "b": {"re": 0.0, "im": 1.0}}


def test_format_verify_table():
    rows = [VerifyRow("ex1.jet", "jet", Status.PASS),
            VerifyRow("lem2.printed", "reciprocal bound", Status.PASS, Status.FAIL, 0.5 + 0j, "printed form fails")]
    lines = format_verify_table(rows).splitlines()
    assert lines[0].split() == ["id", "topic", "certified", "printed", "witness"]
    assert set(lines[1].replace(" ", "")) == {"-"}
    assert lines[2].split() == ["ex1.jet", "jet", "pass", "-"]
    assert lines[3].startswith("lem2.printed")
    assert "0.5" in lines[3]
    assert lines[-2] == ""
    assert lines[-1] == "2/2 certified checks passed"


def test_write_output(tmp_path, capsys, monkeypatch):
    assert write_output("hello\n") is None
    assert capsys.readouterr().out == "hello\n"
    target = tmp_path / "nested" / "report.json"
    assert write_output("{}\n", str(target)) == target
    assert target.read_text(encoding="utf-8") == "{}\n"
    monkeypatch.setattr(app_config, "OUTPUT_DIR", tmp_path)
    assert write_output("x", "relative.txt") == tmp_path / "relative.txt"


def test_write_output_unwritable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("", encoding="utf-8")
    with raises(ConfigurationError):
        write_output("x", str(blocker / "report.json"))


def test_report_document_matches_schema(corpus, validate_document):
    report = lft_analysis(corpus["ex1"])
    document = json.loads(dumps(build_document("analyze", {"report": report_to_dict(report)},
                                               exit_code(report.certificates), seed=1)))
    validate_document(document)
    assert document["exit_code"] == EXIT_FAILED
    assert document["report"]["status"] == "fail"
    failed = [c for c in document["report"]["certificates"] if c["status"] == "fail"]
    assert [c["id"] for c in failed] == ["th2.i"]
    assert failed[0]["witness"] == {"re": 0.0, "im": 1.0}
