"""CLI subcommands: output formats, determinism, exit codes, schema."""

import json
import os

import jsonschema
import pytest

from bforest.cli import run

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "..", "docs", "report.schema.json")

PRISM = '{"n":3,"alphas":[1],"betas":[1],"gammas":[0]}'
FAM2 = '{"n":4,"alphas":[1],"betas":[],"gammas":[0],"half_r":true}'
FAM4 = '{"n":4,"alphas":[1],"betas":[],"gammas":[0],"half_r":true,"half_t":true}'


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_json(capsys):
    code, out, _ = invoke(capsys, "validate", "--spec", PRISM)
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == 1
    assert doc["connected"] is True


def test_validate_rejects_bad_spec(capsys):
    code, _, err = invoke(capsys, "validate", "--spec", '{"n":5,"gammas":[0],"half_r":true}')
    assert code == 1
    assert "invalid spec" in err


def test_count_range(capsys):
    code, out, _ = invoke(capsys, "count", "--spec", PRISM, "--n-start", "3", "--n-end", "6")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["tau"] for r in rows] == [75, 384, 1805, 8100]


def test_oracle_matches_count(capsys):
    _, closed_out, _ = invoke(capsys, "count", "--spec", PRISM, "--n-start", "3", "--n-end", "8")
    _, oracle_out, _ = invoke(capsys, "oracle", "--spec", PRISM, "--n-start", "3", "--n-end", "8")
    closed = [r["tau"] for r in json.loads(closed_out)["rows"]]
    oracle = [r["tau"] for r in json.loads(oracle_out)["rows"]]
    assert closed == oracle


def test_compare_verdict(capsys):
    code, out, _ = invoke(capsys, "compare", "--spec", PRISM, "--n-start", "3", "--n-end", "10")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_equal"] is True
    assert doc["rows"][0] == {"n": 3, "closed": 75, "oracle": 75, "equal": True}


def test_rows_report_errors_for_invalid_orders(capsys):
    # odd orders are invalid for a half-generator family: error rows, exit 0
    code, out, _ = invoke(capsys, "count", "--spec", FAM2, "--n-start", "4", "--n-end", "7")
    assert code == 0
    rows = json.loads(out)["rows"]
    by_n = {r["n"]: r for r in rows}
    assert by_n[4]["tau"] == 16
    assert "error" in by_n[5] and "error" in by_n[7]


def test_arithmetic_rows(capsys):
    code, out, _ = invoke(capsys, "arithmetic", "--spec", PRISM, "--n-start", "3", "--n-end", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["structure_even"] == 6
    assert doc["rows"][0]["witness"] == 5
    assert doc["rows"][1]["witness"] == 4


def test_asymptotics_values(capsys):
    code, out, _ = invoke(capsys, "asymptotics", "--spec", FAM4)
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["measure"]["root_product"]["value"] - 13.32455532) < 1e-7
    assert abs(doc["measure"]["quadrature"]["value"] - 13.32455532) < 1e-3


def test_genfun_verdict(capsys):
    code, out, _ = invoke(capsys, "genfun", "--spec", FAM2, "--max-order", "11")
    assert code == 0
    doc = json.loads(out)
    assert doc["generating_function"]["order"] == 6
    assert doc["symmetry"] is True
    assert abs(doc["value_at_0.1"] - 0.612573) < 1e-5


def test_csv_and_text_formats(capsys):
    code, out, _ = invoke(
        capsys, "count", "--spec", PRISM, "--n-start", "3", "--n-end", "4", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines() == ["n,tau", "3,75", "4,384"]
    code, out, _ = invoke(capsys, "validate", "--spec", PRISM, "--format", "text")
    assert code == 0
    assert "family: 1" in out


def test_csv_rejected_for_non_tabular(capsys):
    code, _, err = invoke(capsys, "genfun", "--spec", PRISM, "--format", "csv", "--max-order", "11")
    assert code == 1
    assert "csv" in err


def test_spec_from_file(tmp_path, capsys):
    path = tmp_path / "spec.json"
    path.write_text(PRISM)
    code, out, _ = invoke(capsys, "count", "--spec", str(path))
    assert code == 0
    assert json.loads(out)["rows"] == [{"n": 3, "tau": 75}]


def test_precision_floor(capsys):
    code, _, err = invoke(capsys, "asymptotics", "--spec", PRISM, "--precision", "8")
    assert code == 1
    assert "precision" in err


def test_json_output_is_byte_deterministic(capsys):
    args = ("report", "--spec", FAM2, "--n-start", "4", "--n-end", "10", "--step", "2",
            "--max-order", "11")
    _, first, _ = invoke(capsys, *args)
    _, second, _ = invoke(capsys, *args)
    assert first == second
    _, parallel, _ = invoke(capsys, *args, "--jobs", "3")
    assert parallel == first


def test_report_validates_against_shipped_schema(capsys):
    with open(SCHEMA_PATH, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    code, out, _ = invoke(
        capsys, "report", "--spec", PRISM, "--n-start", "3", "--n-end", "6", "--max-order", "11"
    )
    assert code == 0
    jsonschema.validate(json.loads(out), schema)


def test_env_var_sets_default_precision(capsys, monkeypatch):
    monkeypatch.setenv("BFOREST_PRECISION", "8")
    code, _, err = invoke(capsys, "asymptotics", "--spec", PRISM)
    assert code == 1
    assert "precision" in err
