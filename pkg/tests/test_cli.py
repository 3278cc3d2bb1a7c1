"""End-to-end command line behavior: output bytes and exit codes."""

import json

import pytest

from artifact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_form(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


# ---------------------------------------------------------------------------
# irreps
# ---------------------------------------------------------------------------

def test_irreps_json_is_complete(capsys):
    code, out, _ = run(capsys, "irreps", "--d", "1", "--e", "1", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["complete"] is True
    assert data["group"] == "G(1,1,3)"
    assert len(data["irreps"]) == 3
    assert sum(r["dim"] ** 2 for r in data["irreps"]) == 6


def test_irreps_rejects_bad_divisor(capsys):
    code, _, err = run(capsys, "irreps", "--d", "3", "--e", "2", "--n", "2")
    assert code == 64
    assert "divide" in err


def test_usage_error_exits_64(capsys):
    code, _, _ = run(capsys, "irreps", "--d", "1", "--e", "1")
    assert code == 64
    code, _, _ = run(capsys, "no-such-command")
    assert code == 64


def test_size_bound_from_the_environment(capsys, monkeypatch):
    monkeypatch.setenv("REFLECT_BOUND", "5")
    code, _, err = run(capsys, "irreps", "--d", "2", "--e", "1", "--n", "2")
    assert code == 2
    assert "bound" in err.lower()
    monkeypatch.setenv("REFLECT_BOUND", "frog")
    code, _, _ = run(capsys, "irreps", "--d", "2", "--e", "1", "--n", "2")
    assert code == 64


def test_jobs_must_be_positive(capsys):
    code, _, _ = run(capsys, "irreps", "--d", "1", "--e", "1", "--n", "3",
                     "--jobs", "0")
    assert code == 64


# ---------------------------------------------------------------------------
# filtration and strata
# ---------------------------------------------------------------------------

def test_filtration_single_layer_bytes(capsys):
    code, out, _ = run(capsys, "filtration", "--n", "6", "--mu", "2,2,2")
    assert code == 0
    assert out == ('{"content":[[4,1,1],[4,2],[5,1],[6]],'
                   '"mu":[2,2,2],"phi":[[4,1,1],[4,2]]}\n')


def test_filtration_output_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "filtration", "--n", "5")
    code2, out2, _ = run(capsys, "filtration", "--n", "5")
    assert code1 == code2 == 0
    assert out1 == out2
    rows = json.loads(out1)
    assert len(rows) == 7


def test_filtration_oracle_agreement(capsys):
    code, out, _ = run(capsys, "filtration", "--n", "4", "--oracle")
    assert code == 0
    rows = json.loads(out)
    assert all(row["match"] for row in rows)
    assert all(row["oracle"] == row["content"] for row in rows)


def test_filtration_rejects_bad_mu(capsys):
    code, _, _ = run(capsys, "filtration", "--n", "4", "--mu", "3,2")
    assert code == 64
    code, _, _ = run(capsys, "filtration", "--n", "4", "--mu", "1,x")
    assert code == 64


def test_strata_json_and_dot(capsys):
    code, out, _ = run(capsys, "strata", "--n", "4")
    assert code == 0
    data = json.loads(out)
    assert len(data["nodes"]) == 5
    assert len(data["edges"]) == 5
    code, dot, _ = run(capsys, "strata", "--n", "4", "--dot")
    assert code == 0
    assert dot.startswith("digraph")
    assert dot.count("->") == 5


# ---------------------------------------------------------------------------
# residues
# ---------------------------------------------------------------------------

def test_residue_classify_affirmative(capsys, tmp_path):
    path = write_form(tmp_path, "half.json", {
        "vars": ["x"],
        "log": [{"c": "1/2", "p": "x^2 - 1"}],
    })
    code, out, _ = run(capsys, "residue", "classify", path)
    assert code == 0
    data = json.loads(out)
    assert data["etale_trivial"] is True
    assert data["l"] == 2
    assert data["phi"] == "x^2 - 1"


def test_residue_classify_negative(capsys, tmp_path):
    path = write_form(tmp_path, "exp.json", {
        "vars": ["x"],
        "log": [{"c": "1", "p": "x"}],
        "exact": "x",
    })
    code, out, _ = run(capsys, "residue", "classify", path)
    assert code == 1
    data = json.loads(out)
    assert data["etale_trivial"] is False
    assert data["reason"] == "exponential component"


def test_residue_divisor_sums_to_zero(capsys, tmp_path):
    path = write_form(tmp_path, "half.json", {
        "vars": ["x"],
        "log": [{"c": "1/2", "p": "x^2 - 1"}],
    })
    code, out, _ = run(capsys, "residue", "divisor", path)
    assert code == 0
    data = json.loads(out)
    assert data["degree_weighted_sum"] == "0"
    assert len(data["entries"]) == 3
    assert any(row["p"] == "oo" for row in data["entries"])


def test_residue_extract_renders_input_variable_names(capsys, tmp_path):
    path = write_form(tmp_path, "nonconst.json", {
        "vars": ["t"],
        "num": "1",
        "den": "t^2 + 1",
    })
    code, out, _ = run(capsys, "residue", "extract", path)
    assert code == 1
    data = json.loads(out)
    assert "t^2 + 1" in data["factor"]
    assert "x1" not in data["factor"] and "x1" not in data["residue"]


def test_residue_extract_affirmative(capsys, tmp_path):
    path = write_form(tmp_path, "proper.json", {
        "vars": ["x"],
        "num": "2*x",
        "den": "x^2 - 1",
    })
    code, out, _ = run(capsys, "residue", "extract", path)
    assert code == 0
    data = json.loads(out)
    assert len(data["log"]) == 2


def test_residue_missing_file_is_a_usage_error(capsys, tmp_path):
    code, _, _ = run(capsys, "residue", "classify",
                     str(tmp_path / "missing.json"))
    assert code == 64


# ---------------------------------------------------------------------------
# branch, mackey, projectors
# ---------------------------------------------------------------------------

def test_branch_table(capsys):
    code, out, _ = run(capsys, "branch", "--n", "4")
    assert code == 0
    assert "OK" in out


def test_mackey_table(capsys):
    code, out, _ = run(capsys, "mackey", "--n", "4", "--h1", "s3",
                       "--h2", "s3")
    assert code == 0
    assert "OK, 2 double cosets" in out


def test_mackey_blocks_syntax(capsys):
    code, out, _ = run(capsys, "mackey", "--n", "4", "--h1", "1,2|3,4",
                       "--h2", "s2")
    assert code == 0
    code, _, _ = run(capsys, "mackey", "--n", "4", "--h1", "1,2|2,3",
                     "--h2", "s2")
    assert code == 64


def test_projectors_regular(capsys):
    code, out, _ = run(capsys, "projectors", "--d", "1", "--e", "1",
                       "--n", "3", "--regular")
    assert code == 0
    assert "OK" in out


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_single_green_criterion(capsys):
    code, out, _ = run(capsys, "verify", "--criteria", "2",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 1
    assert rows[0]["ok"] is True
    assert "seconds" not in rows[0]


def test_verify_json_is_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "--criteria", "2", "--format", "json")
    _, out2, _ = run(capsys, "verify", "--criteria", "2", "--format", "json")
    assert out1 == out2


def test_verify_red_criterion_exits_nonzero(capsys):
    code, out, _ = run(capsys, "verify", "--criteria", "1",
                       "--format", "json")
    assert code == 1
    rows = json.loads(out)
    assert rows[0]["ok"] is False


def test_verify_rejects_unknown_criterion(capsys):
    code, _, _ = run(capsys, "verify", "--criteria", "99")
    assert code == 64
