"""JSON report serialization (byte-deterministic for fixed inputs)."""
from __future__ import annotations

from pathlib import Path
from typing import Union

import orjson

from semiquant.backend.core.constants import REPORT_SCHEMA_FILE
from semiquant.backend.schemas import reports
from semiquant.backend.schemas.reports import ReportEnvelope

_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_APPEND_NEWLINE


def dump_report(envelope: ReportEnvelope) -> bytes:
    return orjson.dumps(envelope.model_dump(mode="json", exclude_none=True), option=_OPTIONS)


def load_report(raw: Union[bytes, str]) -> ReportEnvelope:
    return ReportEnvelope.model_validate_json(raw)


def write_report(envelope: ReportEnvelope, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(dump_report(envelope))
    return path


REPORT_SCHEMA_PATH = Path(reports.__file__).with_name(REPORT_SCHEMA_FILE)


def report_schema() -> bytes:
    """The versioned schema shipped next to the report models."""
    return REPORT_SCHEMA_PATH.read_bytes()
