from pytest import mark, raises

from disk_rigidity.config import KNOWN_KEYS, load_run_config_file, parse_k_list
from disk_rigidity.exceptions import ConfigurationError


def test_parse_k_list():
    assert parse_k_list("1, 2.5,,4") == [1.0, 2.5, 4.0]
    assert parse_k_list(None) == []
    assert parse_k_list("") == []


@mark.parametrize("text", ("a", "0", "-1", "1,inf", "nan"))
def test_parse_k_list_rejects(text):
    with raises(ConfigurationError):
        parse_k_list(text)


def test_load_run_config_file(tmp_path):
    path = tmp_path / "run.env"
    path.write_text("subject=z^2\nTOL_JET=1e-9\nseed=7\nk_list=1,2\nrole=generator\n")
    values = load_run_config_file(path)
    assert values == {"subject": "z^2", "tol_jet": 1e-9, "seed": 7, "k_list": "1,2", "role": "generator"}
    assert set(values) <= KNOWN_KEYS


def test_load_run_config_file_missing(tmp_path):
    with raises(ConfigurationError, match="not found"):
        load_run_config_file(tmp_path / "absent.env")


@mark.parametrize("content", ("colour=blue\n", "seed=abc\n", "subject\n"))
def test_load_run_config_file_rejects(tmp_path, content):
    path = tmp_path / "run.env"
    path.write_text(content)
    with raises(ConfigurationError):
        load_run_config_file(path)
