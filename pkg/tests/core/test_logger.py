import logging
from fractions import Fraction

import numpy as np
import orjson

from semiquant.backend.core.logger import CorrelationCtx, CorrelationIdFilter, JsonFormatter


def make_record(**extra) -> logging.LogRecord:
    record = logging.LogRecord("semiquant", logging.INFO, __file__, 10, "🧮 solved %d rows", (3,), None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_json_formatter_merges_extra_fields():
    record = make_record(
        component="nogo",
        event="solve",
        weight=Fraction(1, 3),
        covariance=np.eye(2),
        free={"b", "a"},
    )
    data = orjson.loads(JsonFormatter().format(record))
    assert data["message"] == "🧮 solved 3 rows"
    assert data["component"] == "nogo"
    assert data["weight"] == "1/3"
    assert data["covariance"] == [[1.0, 0.0], [0.0, 1.0]]
    assert data["free"] == ["a", "b"]
    assert data["run_id"] == "-"


def test_correlation_filter_stamps_the_current_run():
    record = make_record()
    with CorrelationCtx.use("run-42"):
        CorrelationIdFilter().filter(record)
    assert orjson.loads(JsonFormatter().format(record))["run_id"] == "run-42"
    assert CorrelationCtx.get() is None
