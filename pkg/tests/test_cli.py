"""Command-line interface, run in-process."""

import json

import pytest

from frobtab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_cap2(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "2,1", "--n", "3", "--kind", "2ssyt")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 8
    assert lines == sorted(lines)
    assert "1 2 / 1" in lines


def test_enumerate_classical_default(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "1,1", "--n", "2")
    assert code == 0
    assert out.strip().splitlines() == ["1 / 2"]


def test_straighten_reports_verified_result(capsys):
    code, out, _ = run(
        capsys,
        "straighten",
        "--tableau", "1 2 2 4 5 / 3 3 6 7 7",
        "--a", "5", "--b", "5", "--d", "5", "--n", "7",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True
    assert sorted(payload["output"]) == [
        "1 2 3 4 6 / 2 3 5 7 7",
        "1 2 3 5 6 / 2 3 4 7 7",
    ]
    assert payload["input"] == "1 2 2 4 5 / 3 3 6 7 7"


def test_straighten_rejects_bad_tableau(capsys):
    code, _, err = run(
        capsys,
        "straighten",
        "--tableau", "2 1 / 3",
        "--a", "2", "--b", "1", "--d", "1", "--n", "3",
    )
    assert code == 2
    assert "error:" in err


def test_character_json(capsys):
    code, out, _ = run(capsys, "character", "--a", "1", "--b", "1", "--d", "1", "--n", "2")
    assert code == 0
    assert json.loads(out) == [{"exps": [1, 1], "coeff": 1}]


def test_character_csv(capsys):
    code, out, _ = run(
        capsys, "character", "--a", "2", "--b", "2", "--d", "1", "--n", "2",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines() == ["t1,t2,coeff", "2,2,1"]


def test_verify_all_small_grid(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-a", "2", "--max-n", "2")
    assert code == 0
    lines = out.strip().splitlines()
    payloads = [json.loads(line) for line in lines]
    assert all(p["ok"] for p in payloads)
    assert {(p["a"], p["b"], p["d"], p["n"]) for p in payloads} == {
        (a, b, d, n)
        for n in (1, 2)
        for a in (1, 2)
        for b in range(0, a + 1)
        for d in range(0, b + 1)
    }


def test_verify_all_grid_file_and_out_file(tmp_path, capsys):
    grid = tmp_path / "grid.cfg"
    grid.write_text("# small grid\nmax_a = 1\nmax_n = 2\n")
    outfile = tmp_path / "results.jsonl"
    code, out, _ = run(capsys, "verify-all", "--grid", str(grid), "--out", str(outfile))
    assert code == 0
    assert str(outfile) in out
    lines = outfile.read_text().strip().splitlines()
    assert len(lines) == 6  # (1,0,0), (1,1,0), (1,1,1) for each of n = 1, 2
    assert all(json.loads(line)["ok"] for line in lines)


def test_verify_all_rejects_unknown_grid_keys(tmp_path, capsys):
    grid = tmp_path / "grid.cfg"
    grid.write_text("max_q = 3\n")
    code, _, err = run(capsys, "verify-all", "--grid", str(grid))
    assert code == 2
    assert "unknown grid keys" in err


def test_thread_count_does_not_change_output(capsys, monkeypatch):
    monkeypatch.delenv("FROBTAB_THREADS", raising=False)
    _, serial, _ = run(capsys, "verify-all", "--max-a", "2", "--max-n", "2")
    monkeypatch.setenv("FROBTAB_THREADS", "3")
    _, threaded, _ = run(capsys, "verify-all", "--max-a", "2", "--max-n", "2")
    assert serial == threaded


def test_bad_thread_count_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("FROBTAB_THREADS", "-2")
    code, _, err = run(capsys, "verify-all", "--max-a", "1", "--max-n", "1")
    assert code == 2
    assert "FROBTAB_THREADS" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--shape", "banana", "--n", "3"])
    assert exc.value.code == 2


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
