import orjson
import pytest
from jsonschema import Draft202012Validator

from semiquant.backend.core.constants import EXIT_BAD_INPUT, EXIT_OK, TOOL_VERSION
from semiquant.backend.engine.exprio.serialization import REPORT_SCHEMA_PATH, load_report
from semiquant.cli import main

FIELD = ["--m1sq", "1", "--m2sq", "4", "--g", "1", "--hbar1", "1", "--hbar2", "0"]


def test_quantum_bracket_of_canonical_pair(capsys):
    assert main(["bracket", "q", "p", "--kind", "q"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"


def test_standard_hybrid_counterexample(capsys, tmp_path):
    out = tmp_path / "bracket.json"
    code = main(["bracket", "q*x", "q*p*x", "--kind", "s", "--jacobi", "p*k^2", "--json", str(out)])
    assert code == EXIT_OK
    assert "jacobi defect: (1/2)*hbar^2" in capsys.readouterr().out
    report = load_report(out.read_bytes())
    assert report.command == "bracket"
    assert report.tool_version == TOOL_VERSION
    assert report.payload.jacobi.defect == "(1/2)*hbar^2"
    assert not report.payload.jacobi.vanishes
    assert report.wall_time_s is None


def test_leibniz_defect_is_reported(capsys):
    assert main(["bracket", "q", "x", "--kind", "q", "--leibniz", "p"]) == EXIT_OK
    assert "leibniz defect: 0" in capsys.readouterr().out


def test_parse_error_exits_with_bad_input(capsys):
    assert main(["bracket", "q*(", "p"]) == EXIT_BAD_INPUT
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "at position 3" in err


def test_timing_adds_wall_time(tmp_path, capsys):
    out = tmp_path / "timed.json"
    assert main(["bracket", "q", "p", "--json", str(out), "--timing"]) == EXIT_OK
    assert load_report(out.read_bytes()).wall_time_s >= 0


def test_nogo_first_step(capsys, tmp_path):
    out = tmp_path / "nogo.json"
    assert main(["nogo", "--steps", "1", "--json", str(out)]) == EXIT_OK
    assert "verdict: reproduced" in capsys.readouterr().out
    payload = load_report(out.read_bytes()).payload
    assert payload.unknown_counts == [6]
    assert payload.records[0].outcome == "Unique"
    assert len(payload.records[0].assignment) == 6


def test_field_spectrum(capsys, tmp_path):
    out = tmp_path / "spectrum.json"
    argv = ["field", "spectrum", "--m1sq", "1", "--m2sq", "4", "--json", str(out)]
    assert main(argv) == EXIT_OK
    spectrum = load_report(out.read_bytes()).payload.spectrum
    assert (spectrum.mplussq, spectrum.mminussq, spectrum.m3sq) == pytest.approx((4.0, 1.0, 2.5))


def test_field_positivity_reports_q3_witness(capsys, tmp_path):
    out = tmp_path / "positivity.json"
    assert main(["field", "positivity", *FIELD, "--json", str(out)]) == EXIT_OK
    assert capsys.readouterr().out.startswith("NotPositive")
    positivity = load_report(out.read_bytes()).payload.positivity
    assert positivity.verdict == "NotPositive"
    assert positivity.witness_residue == "Q3"


def test_field_invariant_violation_names_parameter(capsys):
    code = main(["field", "positivity", "--m1sq", "1", "--m2sq", "4", "--g", "3"])
    assert code == EXIT_BAD_INPUT
    assert "g=3" in capsys.readouterr().err


def test_field_simulate_is_byte_identical_for_a_seed(tmp_path, capsys):
    args = ["field", "simulate", *FIELD, "--k2", "0", "1", "--seed", "7",
            "--dtau", "0.01", "--n-steps", "2000", "--n-burnin", "100"]
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main([*args, "--json", str(first)]) == EXIT_OK
    assert main([*args, "--json", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    report = load_report(first.read_bytes())
    assert report.parameters["seed"] == 7
    assert [m.ksq for m in report.payload.simulation.modes] == [0.0, 1.0]


def test_field_simulate_reads_grid_file(tmp_path, capsys):
    grid = tmp_path / "grid.txt"
    grid.write_text("0.5\n# comment\n2\n", encoding="utf-8")
    out = tmp_path / "sim.json"
    args = ["field", "simulate", *FIELD, "--grid-file", str(grid), "--dtau", "0.01",
            "--n-steps", "2000", "--n-burnin", "100", "--json", str(out)]
    assert main(args) == EXIT_OK
    assert [m.ksq for m in load_report(out.read_bytes()).payload.simulation.modes] == [0.5, 2.0]


def test_unstable_step_is_bad_input(capsys):
    args = ["field", "simulate", *FIELD, "--k2", "4", "--dtau", "0.5", "--n-steps", "200", "--n-burnin", "10"]
    assert main(args) == EXIT_BAD_INPUT
    assert "stability" in capsys.readouterr().err


def test_schema_command_emits_the_shipped_schema(capsys, tmp_path):
    out = tmp_path / "schema.json"
    assert main(["schema", "--out", str(out)]) == EXIT_OK
    assert out.read_bytes() == REPORT_SCHEMA_PATH.read_bytes()
    assert main(["schema"]) == EXIT_OK
    assert capsys.readouterr().out == REPORT_SCHEMA_PATH.read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "argv",
    [
        ["bracket", "q*x", "q*p*x", "--jacobi", "p*k^2", "--leibniz", "x"],
        ["nogo", "--steps", "1"],
        ["field", "spectrum", *FIELD],
        ["field", "positivity", *FIELD],
        ["field", "simulate", *FIELD, "--k2", "1", "--dtau", "0.01", "--n-steps", "2000", "--n-burnin", "100", "--bias"],
    ],
)
def test_json_reports_conform_to_the_shipped_schema(argv, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main([*argv, "--json", str(out), "--timing"]) == EXIT_OK
    validator = Draft202012Validator(orjson.loads(REPORT_SCHEMA_PATH.read_bytes()))
    errors = [e.message for e in validator.iter_errors(orjson.loads(out.read_bytes()))]
    assert errors == []


def test_unknown_command_is_rejected():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
