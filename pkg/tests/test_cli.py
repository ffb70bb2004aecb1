import json

import pytest

from gradedlab.cli import main


@pytest.fixture()
def zn24_file(tmp_path):
    path = tmp_path / "zn24.json"
    path.write_text(
        json.dumps(
            {
                "ring": {"kind": "Zn", "n": 24},
                "module": {"kind": "self"},
                "submodules": [{"gen": [8]}],
                "s_sets": [[1, 5]],
            }
        ),
        encoding="utf-8",
    )
    return str(path)


@pytest.fixture()
def broken_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(
        json.dumps(
            {
                "ring": {
                    "kind": "tables",
                    "order": 2,
                    "add": [[0, 1], [1, 0]],
                    "mul": [[0, 0], [0, 0]],
                    "zero": 0,
                    "one": 1,
                }
            }
        ),
        encoding="utf-8",
    )
    return str(path)


def test_validate_ok(zn24_file, capsys):
    assert main(["validate", zn24_file]) == 0
    out = capsys.readouterr().out
    assert "ok: ring Z24" in out


def test_validate_broken_exits_one(broken_file, capsys):
    assert main(["validate", broken_file]) == 1
    assert "invalid ring" in capsys.readouterr().err


def test_classify(zn24_file, capsys):
    assert main(["classify", zn24_file, "--submodule", "gen:8"]) == 0
    out = capsys.readouterr().out
    assert "GW(N) = {2, 4, 8, 10, 14, 16, 20, 22}" in out
    assert "weakly primal:  False" in out


def test_classify_bad_selector(zn24_file, capsys):
    assert main(["classify", zn24_file, "--submodule", "gen:99"]) == 1


def test_examples_reproduce(capsys):
    assert main(["examples", "reproduce"]) == 0
    out = capsys.readouterr().out
    assert "exm1.3" in out and "Confirmed" in out
    assert "Discrepancy" in out  # exm1.1 and exm1.4
    assert "certificate independently verified: True" in out


def test_localize(zn24_file, capsys):
    assert main(["localize", zn24_file, "--s", "1,5"]) == 0
    out = capsys.readouterr().out
    assert "R_S has order" in out
    assert main(["localize", zn24_file, "--s", "1,2"]) == 1  # not closed


def test_claims_run_with_budget_and_out(tmp_path, capsys):
    budget = tmp_path / "budget.json"
    budget.write_text(
        json.dumps(
            {
                "max_zn": 6,
                "max_quadratic_n": 2,
                "include_products": False,
                "z_int_max": 4,
                "z_mod_max": 6,
            }
        ),
        encoding="utf-8",
    )
    out = tmp_path / "report"
    assert main(["claims", "run", "--budget", str(budget), "--out", str(out)]) == 0
    assert (out / "report.json").exists()
    assert (out / "report.txt").exists()
    assert (out / "results.csv").exists()
    assert (out / "figures" / "claim_status.png").exists()
    assert (out / "figures" / "status_by_family.png").exists()
    data = json.loads((out / "report.json").read_text(encoding="utf-8"))
    assert data["meta"]["claim_count"] == 24
    assert {c["id"] for c in data["claims"]} >= {"lem1", "thm8", "exm1"}
    for claim in data["claims"]:
        assert "paper_ref" in claim


def test_claims_run_single_claim(tmp_path, capsys):
    budget = tmp_path / "budget.json"
    budget.write_text(
        json.dumps({"max_zn": 2, "max_quadratic_n": 0, "include_products": False,
                    "z_int_max": 12, "z_mod_max": 12}),
        encoding="utf-8",
    )
    assert main(["claims", "run", "--budget", str(budget), "--claim", "exm1.3"]) == 0
    out = capsys.readouterr().out
    assert "exm1" in out


def test_budget_env_var(tmp_path, capsys, monkeypatch):
    budget = tmp_path / "budget.json"
    budget.write_text(
        json.dumps({"max_zn": 3, "max_quadratic_n": 0, "include_products": False,
                    "z_int_max": 1, "z_mod_max": 1}),
        encoding="utf-8",
    )
    monkeypatch.setenv("GRADED_LAB_BUDGET", str(budget))
    out = tmp_path / "report"
    assert main(["claims", "run", "--out", str(out)]) == 0
    data = json.loads((out / "report.json").read_text(encoding="utf-8"))
    assert data["meta"]["instance_count"] == 2  # zn(2) and zn(3)
    assert data["meta"]["budget"]["max_zn"] == 3


def test_missing_file_exits_one(capsys):
    assert main(["validate", "/nonexistent/x.json"]) == 1
