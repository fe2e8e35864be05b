import io
import json

import pytest

from automorphic.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_list_base10():
    code, text = run("list", "--base", "10", "--n", "4")
    assert code == 0
    assert "0625" in text and "9376" in text


def test_list_prime_power_is_empty():
    code, text = run("list", "--base", "8", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(text) == []


def test_list_json_schema():
    code, text = run("list", "--base", "6", "--n", "2", "--include-trivial", "--format", "json")
    assert code == 0
    data = json.loads(text)
    assert [d["residue"] for d in data] == ["0", "1", "9", "28"]
    assert data[3] == {
        "base": 6, "n": 2, "residue": "28", "digits": [4, 4], "selector": [0, 1], "exact_width": True,
    }
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == text


def test_list_csv():
    code, text = run("list", "--base", "10", "--n", "4", "--format", "csv")
    assert text.splitlines() == [
        "base,n,residue,digits,selector,exact_width",
        "10,4,625,0625,\"(1,0)\",false",
        "10,4,9376,9376,\"(0,1)\",true",
    ]


def test_deterministic_output():
    for argv in (["table", "--base", "30", "--max-n", "4"], ["verify", "--bases", "2..12", "--n", "1..3"]):
        assert run(*argv) == run(*argv)


def test_table_single_row():
    code, text = run("table", "--base", "10", "--max-n", "1")
    lines = text.splitlines()
    assert len(lines) == 3
    assert [c.strip() for c in lines[2].split("|")] == ["1", "5", "6"]


def test_table_base30_columns():
    code, text = run("table", "--base", "30", "--max-n", "3", "--format", "json")
    data = json.loads(text)
    assert len(data["columns"]) == 6
    first = sorted(int(v["residue"]) for v in data["rows"][0]["values"])
    assert first == [6, 10, 15, 16, 21, 25]


def test_table_prime_power_base():
    code, text = run("table", "--base", "9", "--max-n", "3")
    assert code == 0
    assert [ln.strip() for ln in text.splitlines()[2:]] == ["1", "2", "3"]


def test_verify_pass_cases():
    for argv in (("--bases", "10..10", "--n", "2..10"), ("--bases", "4..4", "--n", "2..6")):
        code, text = run("verify", *argv)
        assert code == 0
        assert ": pass" in text


def test_verify_json():
    code, text = run("verify", "--bases", "2..6", "--n", "1..3", "--format", "json")
    data = json.loads(text)
    assert data["outcome"] == "pass" and data["violations"] == []
    assert "elapsed_ms" not in data


def test_verify_reports_failures(monkeypatch):
    import automorphic.verification as ver

    monkeypatch.setattr(ver, "brute_force_idempotents", lambda b, n, c: [0])
    code, text = run("verify", "--bases", "10..10", "--n", "1..1")
    assert code == 1
    assert "FAIL (B=10, n=1) enumeration disagrees" in text


def test_oracle_command():
    code, text = run("oracle", "--base", "10", "--n", "4")
    assert code == 0
    assert "enumerated:  0 1 625 9376" in text
    assert text.endswith("agree\n")
    code, _ = run("oracle", "--base", "10", "--n", "8")
    assert code == 2


def test_stats_summary_and_csv(tmp_path):
    path = tmp_path / "s.csv"
    code, text = run("stats", "--base", "10", "--n", "2..10", "--out", str(path))
    assert code == 0
    assert "total: one=2 two=7" in text
    rows = path.read_text().splitlines()
    assert rows[0] == "base,n,r_residue,s_residue,r_leading,s_leading,classification"
    assert len(rows) == 10
    code, text = run("stats", "--base", "10", "--n", "2..2", "--out", str(path))
    assert "total: one=0 two=1" in text


def test_stats_base21(tmp_path):
    path = tmp_path / "s.csv"
    code, _ = run("stats", "--base", "21", "--n", "2..6", "--out", str(path))
    rows = [r.split(",") for r in path.read_text().splitlines()[1:]]
    assert len(rows) == 5
    assert all(int(r[4]) + int(r[5]) == 20 for r in rows)


def test_stats_to_stdout():
    code, text = run("stats", "--base", "10", "--n", "4..5")
    assert text.splitlines()[1:] == ["10,4,625,9376,0,9,one", "10,5,90625,9376,9,0,one"]


def test_stats_unwritable_path(tmp_path):
    code, _ = run("stats", "--base", "10", "--n", "2..3", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2


def test_cryptarithm_command():
    code, text = run("cryptarithm")
    assert code == 0
    assert "solutions: 1" in text
    assert "ATOM = 9376" in text
    assert "9376^2 = 87909376" in text
    assert "0625  rejected: leading digit A is 0" in text


@pytest.mark.parametrize("argv", [
    ["list", "--base", "1", "--n", "2"],
    ["list", "--base", "10", "--n", "0"],
    ["stats", "--base", "10", "--n", "1..3"],
])
def test_domain_errors_exit_2(argv):
    assert run(*argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["list", "--base", "ten", "--n", "2"],
    ["verify", "--bases", "9..2", "--n", "1..2"],
    ["nonsense"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv, out=io.StringIO())
    assert info.value.code == 2
