import json
import pathlib

import pytest

from hilbcheck.cli import main
from hilbcheck.reportschema import (ANALYZE_REPORT_SCHEMA, SchemaError,
                                    VERIFY_REPORT_SCHEMA, validate)

DATA = pathlib.Path(__file__).resolve().parent.parent / "src" / "hilbcheck" / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_colength_and_hf(capsys):
    code, out, _ = run(capsys, "colength", str(DATA / "seven_quadrics_d4.ideal"))
    assert code == 0 and out.strip() == "8"
    code, out, _ = run(capsys, "hf", str(DATA / "squares_d3.ideal"))
    assert code == 0 and out.strip() == "(1,3,3,1)"
    code, out, _ = run(capsys, "hf", str(DATA / "squares_cube_d3.ideal"))
    assert code == 0 and out.strip() == "(1,3,3)"


def test_tangent_command(capsys):
    code, out, _ = run(capsys, "tangent", str(DATA / "seven_quadrics_d4.ideal"))
    assert code == 0 and out.strip() == "25"
    code, out, _ = run(capsys, "tangent", "--graded",
                       str(DATA / "seven_quadrics_d4.ideal"))
    assert code == 0 and "25" in out and "[-1]=4" in out and "[0]=21" in out
    code, out, _ = run(capsys, "tangent", str(DATA / "weight753_colength8.ideal"))
    assert out.strip() == "24"


def test_initial_command(capsys, tmp_path):
    src = tmp_path / "in.ideal"
    src.write_text("field Q\nvars x y z\n ideal:\n".replace(" ideal", "ideal")
                   + "y^2+z^2\nx+x^2+z^2\nz^3\ny*z^2\nx*z^2\nx*y*z\n")
    code, out, _ = run(capsys, "initial", "-w", "1,1,1", str(src))
    assert code == 0
    assert "x^2 + z^2" in out and "x +" not in out


def test_pfaffian_and_smoothable_commands(capsys):
    code, out, _ = run(capsys, "pfaffian", str(DATA / "seven_quadrics_d4.ideal"))
    assert code == 0 and "does not vanish" in out
    code, out, _ = run(capsys, "pfaffian", str(DATA / "salmon.ideal"))
    assert code == 0 and out.startswith("pfaffian 0")
    code, out, _ = run(capsys, "smoothable", str(DATA / "seven_quadrics_d4.ideal"))
    assert code == 0 and out.splitlines()[0] == "NotSmoothable"
    code, out, _ = run(capsys, "smoothable", str(DATA / "monomial_143.ideal"))
    assert code == 0 and out.splitlines()[0] == "Smoothable"


def test_points_ideal_command(capsys):
    code, out, _ = run(capsys, "points-ideal", str(DATA / "points8.pts"), "-d", "4")
    assert code == 0
    assert out.startswith("field Q")
    code2, out2, _ = run(capsys, "points-ideal", str(DATA / "points8.pts"),
                         "--ctx", str(DATA / "seven_quadrics_d4.ideal"))
    assert code2 == 0 and out2 == out


def test_census_command(capsys):
    code, out, _ = run(capsys, "census", "-d", "2", "-n", "4")
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines == ["(1,1,1,1)", "(1,2,1)"]
    assert any("note" in l for l in out.splitlines())


def test_json_round_trips_schema(capsys):
    code, out, _ = run(capsys, "tangent", "--json",
                       str(DATA / "seven_quadrics_d4.ideal"))
    obj = json.loads(out)
    validate(obj, ANALYZE_REPORT_SCHEMA)
    assert obj["result"]["total"] == 25
    code, out, _ = run(capsys, "smoothable", "--json",
                       str(DATA / "monomial_143.ideal"))
    obj = json.loads(out)
    validate(obj, ANALYZE_REPORT_SCHEMA)
    assert obj["result"]["outcome"] == "Smoothable"


def test_verify_paper_single_case(capsys):
    code, out, _ = run(capsys, "verify-paper", "--case", "tangent-21")
    assert code == 0
    assert "PASS" in out and "tangent-21" in out
    assert "seed: 271828" in out


def test_verify_paper_json_schema(capsys):
    code, out, _ = run(capsys, "verify-paper", "--case", "dimension-formulas",
                       "--json")
    assert code == 0
    obj = json.loads(out)
    validate(obj, VERIFY_REPORT_SCHEMA)
    assert obj["all_pass"] is True
    assert obj["seed"] == 271828


def test_verify_paper_deterministic_output(capsys):
    _, out1, _ = run(capsys, "verify-paper", "--case", "tangent-2")
    _, out2, _ = run(capsys, "verify-paper", "--case", "tangent-2")
    assert out1 == out2


def test_verify_paper_jobs_merge_canonically(capsys):
    _, seq, _ = run(capsys, "verify-paper", "--case", "initial-chain")
    _, par, _ = run(capsys, "verify-paper", "--case", "initial-chain",
                    "--jobs", "3")
    assert seq == par


def test_verify_paper_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("HILBCHECK_SEED", "12345")
    _, out, _ = run(capsys, "verify-paper", "--case", "tangent-21")
    assert "seed: 12345" in out


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("field Q\nvars x y\nideal:\nx + w\n")
    code, _, err = run(capsys, "smoothable", str(bad))
    assert code == 2
    assert "line 4" in err


def test_unknown_case_errors(capsys):
    code, _, err = run(capsys, "verify-paper", "--case", "nonexistent")
    assert code == 2 and "no verification case" in err


def test_schema_validator_rejects_bad_reports():
    with pytest.raises(SchemaError):
        validate({"seed": "x", "backend": "b", "all_pass": True, "cases": []},
                 VERIFY_REPORT_SCHEMA)
    with pytest.raises(SchemaError):
        validate({"seed": 1, "backend": "b", "all_pass": True,
                  "cases": [{"name": "a", "status": "MAYBE", "value": ""}]},
                 VERIFY_REPORT_SCHEMA)
    with pytest.raises(SchemaError):
        validate({"seed": 1, "backend": "b", "all_pass": 1, "cases": []},
                 VERIFY_REPORT_SCHEMA)
