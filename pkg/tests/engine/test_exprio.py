from fractions import Fraction

import orjson
import pytest

from semiquant.backend.core.constants import REPORT_SCHEMA_VERSION
from semiquant.backend.engine.algebra import HBAR, I, BracketKind, Dims, Observable, Scalar, jacobiator, variables
from semiquant.backend.engine.exprio import format_observable, format_scalar, parse
from semiquant.backend.engine.exprio.serialization import dump_report, load_report, report_schema
from semiquant.backend.exceptions.errors import (
    ExprError,
    ExprSyntaxError,
    IndexRangeError,
    NegativeExponentError,
    UnknownSymbolError,
)
from semiquant.backend.schemas import reports as report_models
from semiquant.backend.schemas.reports import BracketResult, ReportEnvelope

V = variables(Dims(1, 1))
q, p, x, k = V["q"], V["p"], V["x"], V["k"]


def test_parse_examples():
    assert parse("q*p - p*q") == I * HBAR
    assert parse("x^2*k") == x * x * k
    assert parse("(1/2)*(q*p + p*q)") == q * p - I * HBAR * Fraction(1, 2)


def test_parse_precedence():
    assert parse("-q^2") == -(q * q)
    assert parse("q + p*x") == q + p * x
    assert parse("2*q1*x1") == (q * x).scale(2)


def test_parse_indexed_variables():
    dims = Dims(2, 1)
    q2 = Observable.variable("q", 2, dims)
    p2 = Observable.variable("p", 2, dims)
    assert parse("p2*q2", dims) == q2 * p2 - Observable.constant(I * HBAR, dims)
    assert parse("p1*q2", dims) == Observable.variable("q", 2, dims) * Observable.variable("p", 1, dims)


def test_format_examples():
    assert format_observable(Observable.zero()) == "0"
    counter = jacobiator(BracketKind.STANDARD_HYBRID, q * x, q * p * x, p * k * k)
    assert format_observable(counter) == "(1/2)*hbar^2"
    assert format_observable(q * p - I * HBAR) == "q*p - i*hbar"
    assert format_observable(x * x * k + q) == "x^2*k + q"
    assert format_scalar(Scalar.of(Fraction(-3, 4))) == "-(3/4)"


@pytest.mark.parametrize(
    "observable, text",
    [
        (q, "q"),
        ((p * x).scale(2), "2*p*x"),
        (Observable.constant(Scalar.monomial(Fraction(-1, 2), hbar=2)), "-(1/2)*hbar^2"),
        (k.scale(I * HBAR), "i*hbar*k"),
    ],
)
def test_format_real_and_imaginary_coefficients(observable, text):
    assert format_observable(observable) == text
    assert parse(text) == observable


def test_format_multi_dof_indices():
    dims = Dims(2, 1)
    text = format_observable(Observable.variable("q", 2, dims) * Observable.variable("x", 1, dims))
    assert text == "q2*x"


def test_round_trip(rng, make_observable):
    for dims in (Dims(1, 1), Dims(2, 1), Dims(1, 2)):
        for _ in range(60):
            a = make_observable(rng, dims=dims, max_degree=6, n_terms=4)
            a = a + make_observable(rng, dims=dims, max_degree=2).scale(Scalar.monomial(1, hbarc=2))
            assert parse(format_observable(a), dims) == a


@pytest.mark.parametrize(
    "text, error, position",
    [
        ("q*(", ExprSyntaxError, 3),
        ("", ExprSyntaxError, 0),
        ("q**p", ExprSyntaxError, 2),
        ("q $ p", ExprSyntaxError, 2),
        ("y*q", UnknownSymbolError, 0),
        ("q + x2", IndexRangeError, 4),
        ("q^-1", NegativeExponentError, 2),
        ("1/0", ExprSyntaxError, 2),
        ("q p", ExprSyntaxError, 2),
    ],
)
def test_parse_rejects_with_position(text, error, position):
    with pytest.raises(error) as info:
        parse(text)
    assert isinstance(info.value, ExprError)
    assert info.value.position == position


def test_report_serialization_is_deterministic():
    payload = BracketResult(bracket="standard_hybrid", dims=[1, 1], a="q", b="p", result="1")
    envelope = ReportEnvelope(command="bracket", parameters={"kind": "s", "a": "q"}, payload=payload)
    raw = dump_report(envelope)
    assert raw == dump_report(envelope)
    assert b"wall_time_s" not in raw
    assert load_report(raw) == envelope
    assert list(orjson.loads(raw)) == sorted(orjson.loads(raw))


def test_report_schema_names_every_payload():
    schema = orjson.loads(report_schema())
    text = orjson.dumps(schema).decode()
    for name in ("BracketResult", "NoGoReport", "ScanReport", "FieldReport"):
        assert name in text


def test_shipped_schema_matches_report_models():
    schema = orjson.loads(report_schema())
    assert schema["properties"]["schema_version"]["const"] == REPORT_SCHEMA_VERSION
    assert set(schema["properties"]) == set(ReportEnvelope.model_fields)
    defs = schema["$defs"]
    for name in (
        "DefectCheck", "BracketResult", "CertificateModel", "StepSummary", "NoGoReport", "ScanPointModel",
        "ViolationModel", "OdeCheckModel", "ScanReport", "SpectrumModel", "PositivityModel", "ModeModel",
        "SimulationModel", "FieldReport",
    ):
        model = getattr(report_models, name)
        assert set(defs[name]["properties"]) == set(model.model_fields), name
        required = {field for field, info in model.model_fields.items() if info.is_required()}
        assert required <= set(defs[name]["required"]), name
