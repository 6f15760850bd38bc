import json
import os
import subprocess
import sys
from pathlib import Path

SRC = str(Path(__file__).resolve().parent.parent / "src")

GOLDEN = {
    (3, 4, 2, 10): "Q + 4*Q(z3) + 12*Q(z9) + 3*M3(Q(z9)) + M9(Q(z9))",
    (3, 3, 3, 4): "Q + 4*Q(z3) + 3*Q(z9) + 3*Q(z27) + 3*M3(Q(z3)) + 2*M3(Q(z9)) + 3*M9(Q(z3))",
    (3, 2, 3, 4): "Q + 4*Q(z3) + 3*Q(z9) + 3*Q(z27) + 3*M3(Q(z3)) + 2*M3(Q(z9))",
}


def run_cli(*args):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "metacyclic", *args],
        capture_output=True, text=True, env=env,
    )


def test_decompose_golden_lines():
    for (p, n, m, r), line in GOLDEN.items():
        proc = run_cli("decompose", "--p", str(p), "--n", str(n),
                       "--m", str(m), "--r", str(r))
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.strip() == line


def test_s_flag_canonicalizes_r():
    via_s = run_cli("decompose", "--p", "3", "--n", "2", "--m", "3", "--s", "1")
    via_r = run_cli("decompose", "--p", "3", "--n", "2", "--m", "3", "--r", "4")
    assert via_s.returncode == via_r.returncode == 0
    assert via_s.stdout == via_r.stdout
    assert "r=4" in via_s.stderr


def test_abelian_decompose():
    proc = run_cli("decompose", "--p", "3", "--n", "1", "--m", "1", "--abelian")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "Q + 4*Q(z3)"


def test_json_round_trip():
    from metacyclic.cli import DecompositionReport

    for p, n, m, r in GOLDEN:
        proc = run_cli("decompose", "--p", str(p), "--n", str(n),
                       "--m", str(m), "--r", str(r), "--format", "json")
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        report = DecompositionReport.from_json_dict(doc)
        assert report.to_json_dict() == doc
        assert json.loads(json.dumps(report.to_json_dict())) == doc


def test_text_grammar_round_trip():
    from metacyclic.cli import format_decomposition, parse_decomposition
    from metacyclic.formulas import wedderburn_closed_form
    from metacyclic.group import validate
    from metacyclic.verify import valid_parameter_sets

    for params in valid_parameter_sets(3, 729):
        dec = wedderburn_closed_form(params)
        line = format_decomposition(dec)
        assert parse_decomposition(line, params.p) == dec
    abelian = validate(3, 2, 2, 1, abelian=True)
    dec = wedderburn_closed_form(abelian)
    assert parse_decomposition(format_decomposition(dec), 3) == dec


def test_verify_command():
    proc = run_cli("verify", "--p", "3", "--n", "2", "--m", "3", "--r", "4")
    assert proc.returncode == 0
    assert proc.stdout.startswith("VERIFIED")

    sweep = run_cli("verify", "--p", "3", "--all", "--max-order", "729")
    assert sweep.returncode == 0
    assert sweep.stdout.count("VERIFIED") == 13


def test_verify_deep():
    proc = run_cli("verify", "--p", "3", "--n", "2", "--m", "2", "--r", "4", "--deep")
    assert proc.returncode == 0, proc.stderr
    assert "orthogonality: OK" in proc.stderr
    assert "matrix_relations: OK" in proc.stderr


def test_corrupt_hook_reports_mismatch():
    proc = run_cli("verify", "--p", "3", "--n", "2", "--m", "3", "--r", "4",
                   "--corrupt-hook")
    assert proc.returncode == 3
    assert "MISMATCH" in proc.stdout
    assert "closed=" in proc.stdout and "oracle=" in proc.stdout


def test_exit_codes():
    usage = run_cli("decompose", "--p", "3", "--n", "2")
    assert usage.returncode == 1
    validation = run_cli("decompose", "--p", "4", "--n", "2", "--m", "1", "--r", "3")
    assert validation.returncode == 2
    size = run_cli("verify", "--p", "3", "--n", "9", "--m", "1", "--s", "1")
    assert size.returncode == 4
    formula_size = run_cli("decompose", "--p", "3", "--n", "12", "--m", "5", "--s", "1")
    assert formula_size.returncode == 4


def test_counts_command():
    proc = run_cli("counts", "--p", "3", "--n", "4", "--m", "2", "--r", "10",
                   "--kind", "complex", "--format", "json")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert {(row["degree"], row["count"]) for row in doc["rows"]} == {
        (1, 81), (3, 18), (9, 6)
    }

    rational = run_cli("counts", "--p", "3", "--n", "4", "--m", "2", "--r", "10",
                       "--kind", "rational", "--oracle", "--format", "json")
    assert rational.returncode == 0
    doc = json.loads(rational.stdout)
    rows = {row["lambda"]: (row["count"], row["oracle"]) for row in doc["rows"]}
    assert rows == {0: (1, 1), 1: (4, 4), 2: (12, 12), 3: (3, 3), 4: (1, 1)}


def test_sweep_rows_and_threads():
    serial = run_cli("sweep", "--p", "3", "--max-order", "243", "--format", "json")
    assert serial.returncode == 0
    rows = [json.loads(line) for line in serial.stdout.splitlines()]
    assert len(rows) == 7
    assert all(row["dim_ok"] for row in rows)
    for row in rows:
        assert json.loads(json.dumps(row)) == row

    threaded = run_cli("sweep", "--p", "3", "--max-order", "243",
                       "--format", "json", "--threads", "2")
    assert threaded.returncode == 0
    assert threaded.stdout == serial.stdout
