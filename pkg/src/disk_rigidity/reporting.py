# file: src/disk_rigidity/reporting.py
"""
Serialisation of analysis results: the JSON report document, the verify
table and exit-code aggregation.
"""

import dataclasses
import json
import math
from datetime import datetime, timezone
from enum import Enum
from functools import singledispatch
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from . import __version__
from . import config as app_config
from .exceptions import ConfigurationError
from .expressions import MapExpr, to_text
from .logging_utils import logger
from .mobius import Mobius
from .models import Certificate, RigidityReport, Status, VerifyRow

TOOL_NAME = "disk-rigidity-cli"

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_FAILED = 2
EXIT_INCONCLUSIVE = 3
EXIT_INTERNAL_ERROR = 4


def exit_code(certificates: Iterable[Certificate]) -> int:
    statuses = {cert.status for cert in certificates}
    if Status.FAIL in statuses:
        return EXIT_FAILED
    if Status.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def verify_exit_code(rows: Sequence[VerifyRow]) -> int:
    return EXIT_OK if all(row.certified.ok for row in rows) else EXIT_FAILED


def _float(value: float) -> Any:
    """JSON has no literal for inf/nan, so non-finite floats become strings."""
    if math.isfinite(value):
        return value
    if math.isnan(value):
        return "nan"
    return "inf" if value > 0 else "-inf"


@singledispatch
def to_jsonable(value: Any) -> Any:
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if hasattr(value, "_asdict"):
        return {key: to_jsonable(item) for key, item in value._asdict().items()}
    raise TypeError(f"No JSON form for {type(value).__name__}")


@to_jsonable.register(type(None))
@to_jsonable.register(bool)
@to_jsonable.register(int)
def _(value):
    return value


@to_jsonable.register(str)
def _(value):
    return value.value if isinstance(value, Enum) else value


@to_jsonable.register(float)
def _(value):
    return _float(value)


@to_jsonable.register(complex)
def _(value):
    return {"re": _float(value.real), "im": _float(value.imag)}


@to_jsonable.register(np.generic)
def _(value):
    return to_jsonable(value.item())


@to_jsonable.register(np.ndarray)
def _(value):
    return [to_jsonable(item) for item in value.tolist()]


@to_jsonable.register(Enum)
def _(value):
    return value.value


@to_jsonable.register(MapExpr)
def _(value):
    return to_text(value)


@to_jsonable.register(Mobius)
def _(value):
    return [to_jsonable(complex(c)) for c in (value.a, value.b, value.c, value.d)]


@to_jsonable.register(dict)
def _(value):
    return {_key(key): to_jsonable(item) for key, item in value.items()}


@to_jsonable.register(list)
@to_jsonable.register(tuple)
def _(value):
    if hasattr(value, "_asdict"):
        return {key: to_jsonable(item) for key, item in value._asdict().items()}
    return [to_jsonable(item) for item in value]


@to_jsonable.register(set)
@to_jsonable.register(frozenset)
def _(value):
    return sorted(to_jsonable(item) for item in value)


def _key(key: Any) -> str:
    if isinstance(key, Enum):
        return str(key.value)
    if isinstance(key, float):
        return f"{key:.12g}"
    return str(key)


def certificate_to_dict(cert: Certificate) -> Dict[str, Any]:
    return {
        "id": cert.condition_id,
        "status": cert.status.value,
        "witness": to_jsonable(cert.witness),
        "value": to_jsonable(cert.value),
        "detail": cert.detail,
        "k": to_jsonable(cert.k),
    }


def report_to_dict(report: RigidityReport) -> Dict[str, Any]:
    """Flattens a report into JSON-ready data; condition ids are kept verbatim."""
    return {
        "subject": report.subject,
        "role": report.role,
        "jet": to_jsonable(report.jet),
        "alpha": to_jsonable(report.alpha),
        "a": to_jsonable(report.a),
        "a_lambda": to_jsonable(report.a_lambda),
        "schwarzian": to_jsonable(report.schwarzian),
        "m": to_jsonable(report.m),
        "verdicts": sorted(v.value for v in report.verdicts),
        "certificates": [certificate_to_dict(c) for c in report.certificates],
        "audit": [
            {
                "id": finding.condition_id,
                "certified_ok": finding.certified_ok,
                "printed_ok": finding.printed_ok,
                "witness": to_jsonable(finding.witness),
                "lhs": to_jsonable(finding.lhs),
                "rhs": to_jsonable(finding.rhs),
                "note": finding.note,
            }
            for finding in report.audit
        ],
        "values": to_jsonable(report.values),
        "status": _overall_status(report.certificates),
    }


def _overall_status(certificates: Sequence[Certificate]) -> str:
    code = exit_code(certificates)
    if code == EXIT_FAILED:
        return Status.FAIL.value
    if code == EXIT_INCONCLUSIVE:
        return Status.INCONCLUSIVE.value
    return Status.PASS.value


def verify_row_to_dict(row: VerifyRow) -> Dict[str, Any]:
    return {
        "id": row.row_id,
        "topic": row.topic,
        "certified": row.certified.value,
        "printed": row.printed.value if row.printed is not None else None,
        "witness": to_jsonable(row.witness),
        "detail": row.detail,
    }


def build_document(command: str, payload: Dict[str, Any], code: int, no_meta: bool = False,
                   seed: Optional[int] = None) -> Dict[str, Any]:
    """Wraps a command payload with the tool header; ``meta`` is omitted when no_meta is set."""
    document = {"tool": TOOL_NAME, "version": __version__, "command": command, "exit_code": code}
    document.update(payload)
    if not no_meta:
        document["meta"] = {
            "generated": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "seed": seed,
        }
    return document


def dumps(document: Dict[str, Any]) -> str:
    return json.dumps(to_jsonable(document), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def format_verify_table(rows: Sequence[VerifyRow]) -> str:
    """Plain-text table, one line per verify row."""
    header = ("id", "topic", "certified", "printed", "witness")
    lines: List[tuple] = [header]
    for row in rows:
        witness = "" if row.witness is None else f"{row.witness:.6g}"
        printed = "-" if row.printed is None else row.printed.value
        lines.append((row.row_id, row.topic, row.certified.value, printed, witness))
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    rendered = ["  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in lines]
    rendered.insert(1, "  ".join("-" * width for width in widths))
    passed = sum(1 for row in rows if row.certified.ok)
    rendered.append("")
    rendered.append(f"{passed}/{len(rows)} certified checks passed")
    return "\n".join(rendered) + "\n"


def resolve_output_path(out: str) -> Path:
    path = Path(out)
    if not path.is_absolute():
        path = app_config.OUTPUT_DIR / path
    return path


def write_output(text: str, out: Optional[str] = None) -> Optional[Path]:
    """Writes text to the output file, or to stdout when no path is given."""
    if out is None:
        print(text, end="")
        return None
    path = resolve_output_path(out)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"Cannot write output file {path}: {e}")
    logger.info(f"Wrote {path}")
    return path
