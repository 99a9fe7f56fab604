"""Command-line surface: every subcommand, the exit-code contract
(0 ok, 2 validation, 3 cross-check mismatch, 4 conjecture divergence,
5 parse error), cost guards, and deterministic output under --jobs.
"""

import json
import subprocess
import sys

import pytest

from rblab.cli import main
from rblab.exactlin import Matrix
from rblab.rbcore import operator_from_dict
from rblab.tables import TWELVE_N2


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


GOOD_OP = {"n": 2, "weight": "1", "matrix": [["0", "1"], ["0", "0"]]}
BAD_OP = {"n": 2, "weight": "1", "matrix": [["0", "1"], ["1", "0"]]}


# ---------------------------------------------------------------- enumerate

def test_enumerate_n2_is_exactly_the_twelve(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    got = {operator_from_dict(json.loads(line)).matrix for line in lines}
    assert got == {Matrix.from_rows(rows) for rows in TWELVE_N2}


def test_enumerate_csv_format(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,weight,class,matrix"
    assert len(lines) == 13
    for line in lines[1:]:
        n, w, label, flat = line.split(",")
        assert n == "2" and w == "1"
        assert label in ("splitting", "inner-splitting", "non-splitting")
        assert len(flat.split(";")) == 4


def test_enumerate_class_filters(capsys):
    sizes = {}
    for label in ("all", "splitting", "inner-splitting", "non-splitting"):
        code, out, _ = run(capsys, "enumerate", "--n", "3", "--class", label)
        assert code == 0
        sizes[label] = len(out.splitlines())
    assert sizes == {"all": 128, "splitting": 50,
                     "inner-splitting": 32, "non-splitting": 78}


def test_enumerate_fractional_weight(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--weight", "1/2")
    assert code == 0
    docs = [json.loads(line) for line in out.splitlines()]
    assert all(doc["weight"] == "1/2" for doc in docs)
    entries = {x for doc in docs for row in doc["matrix"] for x in row}
    assert entries == {"0", "1/2", "-1/2"}


def test_enumerate_rejects_bad_n(capsys):
    assert run(capsys, "enumerate", "--n", "0")[0] == 2
    assert run(capsys, "enumerate", "--n", "8")[0] == 2


def test_enumerate_rejects_zero_weight(capsys):
    assert run(capsys, "enumerate", "--n", "2", "--weight", "0")[0] == 2


def test_env_cap_and_force(capsys, monkeypatch):
    monkeypatch.setenv("RBLAB_MAX_N", "2")
    assert run(capsys, "enumerate", "--n", "3")[0] == 2
    assert run(capsys, "enumerate", "--n", "2")[0] == 0
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--force")
    assert code == 0 and len(out.splitlines()) == 128
    monkeypatch.setenv("RBLAB_MAX_N", "junk")
    assert run(capsys, "enumerate", "--n", "2")[0] == 2


def test_out_file_matches_stdout(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    target = tmp_path / "ops.jsonl"
    code2 = main(["enumerate", "--n", "2", "--out", str(target)])
    capsys.readouterr()
    assert code == code2 == 0
    assert target.read_text() == out


# ------------------------------------------------------------------- oracle

def test_oracle_agrees_with_enumeration(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "2")
    report = json.loads(out)
    assert code == 0
    assert report["match"] is True
    assert report["identity_solutions"] == report["enumerated"] == 12
    assert report["candidates"] == 36


def test_oracle_cost_guard(capsys):
    assert run(capsys, "oracle", "--n", "5")[0] == 2


# -------------------------------------------------------------------- count

def test_count_labeled_report(capsys):
    code, out, _ = run(capsys, "count", "--max-n", "3")
    assert code == 0
    report = json.loads(out)
    assert report["mismatches"] == []
    cells = {(row["n"], row["class"]): row for row in report["counts"]}
    assert cells[(3, "all")]["enumerated"] == 128
    assert cells[(3, "all")]["formula"] == 128
    assert cells[(3, "all")]["reference"] == 128
    assert cells[(3, "splitting")]["enumerated"] == 50
    assert cells[(2, "non-splitting")]["enumerated"] == 4


def test_count_unlabeled_report(capsys):
    code, out, _ = run(capsys, "count", "--max-n", "3", "--unlabeled")
    assert code == 0
    cells = {(row["n"], row["class"]): row
             for row in json.loads(out)["counts"]}
    assert cells[(3, "all")]["enumerated"] == 26
    assert cells[(3, "splitting")]["enumerated"] == 12
    assert cells[(3, "inner-splitting")]["reference"] == 8


def test_count_csv_columns(capsys):
    code, out, _ = run(capsys, "count", "--max-n", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,class,labeled_count,unlabeled_count"
    assert "2,all,12," in lines
    code, out, _ = run(capsys, "count", "--max-n", "2", "--format", "csv",
                       "--unlabeled")
    assert "2,all,,7" in out.splitlines()


# --------------------------------------------------------------- conjecture

def test_conjecture_labeled_agrees(capsys):
    code, out, _ = run(capsys, "conjecture", "--which", "splitting-labeled",
                       "--max-n", "5")
    assert code == 0
    report = json.loads(out)
    assert "conjectural" in report["disclaimer"]
    computed = [v["computed"] for v in report["verdicts"]]
    assert computed == [2, 8, 50, 432, 4802]
    assert all(v["verdict"] == "AGREES" for v in report["verdicts"])
    assert [v["cross_check"] for v in report["verdicts"]] == computed


def test_conjecture_unlabeled_agrees(capsys):
    code, out, _ = run(capsys, "conjecture", "--which", "splitting-unlabeled",
                       "--max-n", "4")
    assert code == 0
    report = json.loads(out)
    assert [v["computed"] for v in report["verdicts"]] == [2, 5, 12, 30]
    assert all(v["verdict"] == "AGREES" for v in report["verdicts"])


# ----------------------------------------------------- file-based commands

def test_verify_accepts_valid_operator(capsys, tmp_path):
    path = write_json(tmp_path, "op.json", GOOD_OP)
    code, out, _ = run(capsys, "verify", path)
    report = json.loads(out)
    assert code == 0
    assert report["is_rb"] is True and report["structure_ok"] is True
    assert report["structure_tag"] is None


def test_verify_rejects_invalid_operator(capsys, tmp_path):
    path = write_json(tmp_path, "op.json", BAD_OP)
    code, out, _ = run(capsys, "verify", path)
    report = json.loads(out)
    assert code == 2
    assert report["is_rb"] is False
    assert report["structure_tag"] == "SF3a"


def test_verify_normalizes_general_weight(capsys, tmp_path):
    doc = {"n": 2, "weight": "2", "matrix": [["0", "0"], ["0", "-2"]]}
    path = write_json(tmp_path, "op.json", doc)
    code, out, _ = run(capsys, "verify", path)
    assert code == 0
    assert json.loads(out)["is_rb"] is True


def test_verify_parse_failures(capsys, tmp_path):
    raw = tmp_path / "broken.json"
    raw.write_text('{"n": 2,')
    assert run(capsys, "verify", str(raw))[0] == 5
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 5
    short = write_json(tmp_path, "short.json",
                       {"n": 2, "weight": "1", "matrix": [["0", "1"]]})
    assert run(capsys, "verify", short)[0] == 5


def test_classify_reports_class(capsys, tmp_path):
    path = write_json(tmp_path, "op.json", GOOD_OP)
    code, out, _ = run(capsys, "classify", path)
    report = json.loads(out)
    assert code == 0
    assert report["class_label"] == "non-splitting"
    assert report["is_splitting"] is False


def test_classify_handles_non_rb(capsys, tmp_path):
    path = write_json(tmp_path, "op.json", BAD_OP)
    code, out, _ = run(capsys, "classify", path)
    assert code == 0
    assert json.loads(out)["class_label"] == "non-rb"


def test_tree_and_matrix_round_trip(capsys, tmp_path):
    op_doc = {"n": 2, "weight": "1/2", "matrix": [["0", "1/2"], ["0", "0"]]}
    op_path = write_json(tmp_path, "op.json", op_doc)
    code, out, _ = run(capsys, "tree", op_path)
    assert code == 0
    tree_doc = json.loads(out)
    assert tree_doc == {"n": 2, "parent": [0, 1], "color": ["w", "w"],
                        "weight": "1/2"}
    tree_path = write_json(tmp_path, "tree.json", tree_doc)
    code, out, _ = run(capsys, "matrix", tree_path)
    assert code == 0
    assert json.loads(out) == op_doc


def test_tree_rejects_non_rb(capsys, tmp_path):
    path = write_json(tmp_path, "op.json", BAD_OP)
    assert run(capsys, "tree", path)[0] == 2


def test_matrix_weight_override(capsys, tmp_path):
    tree_doc = {"n": 2, "parent": [0, 1], "color": ["w", "w"]}
    path = write_json(tmp_path, "tree.json", tree_doc)
    code, out, _ = run(capsys, "matrix", path, "--weight", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["weight"] == "3" and doc["matrix"][0][1] == "3"


def test_matrix_parse_vs_validation_split(capsys, tmp_path):
    cyclic = write_json(tmp_path, "cyc.json",
                        {"n": 2, "parent": [2, 1], "color": ["w", "w"]})
    assert run(capsys, "matrix", cyclic)[0] == 2
    shaped = write_json(tmp_path, "shape.json",
                        {"n": 2, "parent": [0, 1], "color": ["w"]})
    assert run(capsys, "matrix", shaped)[0] == 5
    badweight = write_json(tmp_path, "w.json",
                           {"n": 2, "parent": [0, 1], "color": ["w", "w"],
                            "weight": "0"})
    assert run(capsys, "matrix", badweight)[0] == 2


# ----------------------------------------------------------------- theorem3

def test_theorem3_exhaustive_n2(capsys):
    code, out, _ = run(capsys, "theorem3", "--n", "2")
    report = json.loads(out)
    assert code == 0
    assert report["parameters"]["mode"] == "exhaustive"
    assert report["total"] == 12 and report["certified"] == 12
    assert report["failed"] == 0


def test_theorem3_certificates_file(capsys, tmp_path):
    target = tmp_path / "certs.jsonl"
    code, out, _ = run(capsys, "theorem3", "--n", "2", "--out", str(target))
    assert code == 0
    lines = target.read_text().splitlines()
    assert len(lines) == 12
    for line in lines:
        cert = json.loads(line)
        assert cert["certified"] is True
        assert len(cert["idempotents"]) == 2


def test_theorem3_sampled_is_seeded(capsys, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for target in (a, b):
        code, _, _ = run(capsys, "theorem3", "--n", "5", "--sample", "10",
                         "--seed", "3", "--out", str(target))
        assert code == 0
    assert a.read_text() == b.read_text()
    assert len(a.read_text().splitlines()) == 10


def test_theorem3_cost_guard(capsys):
    assert run(capsys, "theorem3", "--n", "7")[0] == 2


# ------------------------------------------------------------- determinism

def test_jobs_do_not_change_output(capsys):
    _, out1, _ = run(capsys, "enumerate", "--n", "3", "--jobs", "1")
    _, out2, _ = run(capsys, "enumerate", "--n", "3", "--jobs", "2")
    assert out1 == out2
    _, c1, _ = run(capsys, "count", "--max-n", "3", "--jobs", "1")
    _, c2, _ = run(capsys, "count", "--max-n", "3", "--jobs", "2")
    assert c1 == c2
    _, o1, _ = run(capsys, "oracle", "--n", "2", "--jobs", "2")
    assert json.loads(o1)["match"] is True


def test_timing_only_on_stderr(capsys):
    _, out, err = run(capsys, "count", "--max-n", "2")
    json.loads(out)  # stdout must be pure JSON
    assert "# elapsed:" in err
    assert "elapsed" not in out


# ------------------------------------------------------------ entry points

def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rblab", "enumerate",
                           "--n", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 2


def test_console_script():
    proc = subprocess.run(["rblab", "count", "--max-n", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "count"


def test_usage_error_is_exit_2():
    proc = subprocess.run([sys.executable, "-m", "rblab", "enumerate"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
