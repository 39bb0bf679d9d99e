import json
from pathlib import Path

import jsonschema
from pytest import fixture

from disk_rigidity.parser import parse_map
from disk_rigidity.verification import CORPUS

SCHEMA_PATH = Path(__file__).resolve().parents[1] / "schema.json"


@fixture
def corpus():
    """Named maps of the verify corpus, parsed."""
    return {name: parse_map(text) for name, text in CORPUS.items()}


@fixture(scope="session")
def report_schema():
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))


@fixture
def validate_document(report_schema):
    def validate(document):
        jsonschema.validate(document, report_schema)
        return document
    return validate
