"""Command-line surface: schemas, exit codes, determinism, parsing."""

import json
import math
import os
import subprocess
import sys

import jsonschema
import pytest

from snumbers.cli import (
    CSV_COLUMNS,
    REPORT_SCHEMA,
    config_from_args,
    main,
    render_json,
    run_verify,
    _build_parser,
)

CLI = [sys.executable, "-m", "snumbers.cli"]


def run_cli(*args, env=None):
    e = dict(os.environ)
    e.pop("SNUM_SEED", None)
    if env:
        e.update(env)
    return subprocess.run(CLI + list(args), capture_output=True, text=True, env=e)


def cli_json(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def diag_csv(tmp_path):
    path = tmp_path / "diag.csv"
    path.write_text("3,0,0\n0,2,0\n0,0,1\n")
    return str(path)


# ---------------------------------------------------------------------------
# schema and shape
# ---------------------------------------------------------------------------


def test_all_subcommands_emit_schema_valid_json(capsys, diag_csv):
    invocations = [
        ["idnumbers", "--p", "1", "--q", "2", "--n", "4", "--k", "1..3"],
        ["estimate", "--input", diag_csv, "--k", "1..2"],
        ["verify", "--budget", "300"],
        ["volume", "--p", "0.5", "--n", "3"],
        ["sweep", "--p", "1", "--q", "inf", "--n", "16", "--k", "2"],
    ]
    for argv in invocations:
        code, doc = cli_json(capsys, *argv)
        assert code == 0, argv
        jsonschema.validate(doc, REPORT_SCHEMA)
        assert doc["config"]["command"] == argv[0]


def test_csv_output_columns(capsys):
    assert main(["idnumbers", "--p", "2", "--q", "2", "--n", "3", "--k", "1",
                 "--output", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) > 1


# ---------------------------------------------------------------------------
# known values through the pipe
# ---------------------------------------------------------------------------


def rows_of(doc, quantity, k=None):
    rows = [r for r in doc["rows"] if r["quantity"] == quantity]
    if k is not None:
        rows = [r for r in rows if r["k"] == k]
    return rows


def test_idnumbers_hilbert_identity(capsys):
    _, doc = cli_json(capsys, "idnumbers", "--p", "2", "--q", "2", "--n", "4",
                      "--k", "1..4")
    for quantity in ("a", "d"):
        for r in rows_of(doc, quantity):
            assert r["upper"] == 1.0
            assert r["exact"]
            if r["method"] == "closed-form":
                assert r["lower"] == 1.0


def test_idnumbers_exact_formula_value(capsys):
    _, doc = cli_json(capsys, "idnumbers", "--p", "2", "--q", "1", "--n", "4",
                      "--k", "2")
    (a,) = rows_of(doc, "a", 2)
    assert a["lower"] == pytest.approx(math.sqrt(3.0))
    assert a["label"] == "exact-formula"


def test_idnumbers_regime_value_complex(capsys):
    _, doc = cli_json(capsys, "idnumbers", "--p", "1", "--q", "inf", "--n", "8",
                      "--k", "4", "--field", "complex")
    rows = [r for r in rows_of(doc, "e", 4) if r["method"] == "regime-envelope"]
    assert rows, doc["rows"]
    assert rows[0]["label"] == "mid-k"
    assert rows[0]["upper"] == pytest.approx(0.5804820237218405, rel=1e-12)


def test_estimate_diagonal_exact(capsys, diag_csv):
    _, doc = cli_json(capsys, "estimate", "--input", diag_csv, "--k", "1..3")
    assert [r["lower"] for r in rows_of(doc, "a")] == [3.0, 2.0, 1.0]
    assert [r["lower"] for r in rows_of(doc, "d")] == [3.0, 2.0, 1.0]
    assert all(r["exact"] for r in rows_of(doc, "a"))


def test_volume_unit_disc(capsys):
    _, doc = cli_json(capsys, "volume", "--p", "2", "--n", "2")
    (vol,) = rows_of(doc, "vol")
    (logvol,) = rows_of(doc, "logvol")
    assert vol["lower"] == pytest.approx(math.pi)
    assert logvol["lower"] == pytest.approx(math.log(math.pi))


def test_infinity_round_trips_in_config(capsys):
    _, doc = cli_json(capsys, "idnumbers", "--p", "1", "--q", "inf", "--n", "4",
                      "--k", "1")
    assert doc["config"]["q"] == "inf"  # JSON has no bare Infinity


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------


def test_verify_clean_exits_zero():
    r = run_cli("verify", "--budget", "300")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["violations"] == []


def test_verify_injected_bug_exits_one():
    r = run_cli("verify", "--budget", "300", "--inject-bug", "weyl")
    assert r.returncode == 1
    doc = json.loads(r.stdout)
    assert doc["violations"], "expected a witness"
    w = doc["violations"][0]
    assert w["lhs"] > w["rhs"]


def test_malformed_csv_exits_two_and_names_position(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\n3,oops\n")
    r = run_cli("estimate", "--input", str(bad))
    assert r.returncode == 2
    assert "line 2" in r.stderr
    assert "column 2" in r.stderr


def test_ragged_csv_exits_two(tmp_path):
    bad = tmp_path / "ragged.csv"
    bad.write_text("1,2\n3\n")
    r = run_cli("estimate", "--input", str(bad))
    assert r.returncode == 2
    assert "line 2" in r.stderr


def test_bad_exponent_exits_two():
    r = run_cli("idnumbers", "--p", "banana", "--q", "2", "--n", "4", "--k", "1")
    assert r.returncode == 2
    r = run_cli("idnumbers", "--p", "-1", "--q", "2", "--n", "4", "--k", "1")
    assert r.returncode == 2


def test_dimension_mismatch_exits_two(tmp_path):
    f = tmp_path / "m.csv"
    f.write_text("1,0\n0,1\n")
    r = run_cli("estimate", "--input", str(f), "--n", "5")
    assert r.returncode == 2
    assert "does not match matrix columns" in r.stderr


# ---------------------------------------------------------------------------
# determinism and seeds
# ---------------------------------------------------------------------------


def test_verify_twice_byte_identical_in_process():
    parser = _build_parser()
    cfg = config_from_args(parser.parse_args(["verify", "--budget", "400"]))
    rep1, code1 = run_verify(cfg)
    rep2, code2 = run_verify(cfg)
    assert (code1, code2) == (0, 0)
    assert render_json(rep1) == render_json(rep2)


def test_cli_byte_identical_across_processes():
    a = run_cli("verify", "--budget", "300", "--seed", "7")
    b = run_cli("verify", "--budget", "300", "--seed", "7")
    assert a.stdout == b.stdout
    assert a.stdout.encode() == b.stdout.encode()


def test_seed_env_fallback_and_override():
    base = run_cli("idnumbers", "--p", "1", "--q", "2", "--n", "6", "--k", "2",
                   env={"SNUM_SEED": "9"})
    assert json.loads(base.stdout)["config"]["seed"] == 9
    over = run_cli("idnumbers", "--p", "1", "--q", "2", "--n", "6", "--k", "2",
                   "--seed", "11", env={"SNUM_SEED": "9"})
    assert json.loads(over.stdout)["config"]["seed"] == 11


def test_timings_opt_in(capsys):
    _, quiet = cli_json(capsys, "verify", "--budget", "300")
    assert all(r["elapsed_ms"] == 0.0 for r in quiet["rows"])
    _, timed = cli_json(capsys, "verify", "--budget", "300", "--timings")
    assert any(r["elapsed_ms"] > 0.0 for r in timed["rows"])
