import json

import pytest

from atomforge.cli import main

GENUS1 = "k=5;chords=1-4,2-5;base=pos"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_golden(capsys):
    code, out, err = run(capsys, "count", "--k", "10")
    assert code == 0
    assert out.strip() == "9496"
    assert err == ""


def test_count_pformula(capsys):
    code, out, _ = run(capsys, "count", "--k", "20", "--method", "pformula")
    assert code == 0
    assert out.strip() == "23758664096"


def test_count_domain_error(capsys):
    code, _, err = run(capsys, "count", "--k", "0")
    assert code == 1
    assert err.startswith("error:")
    assert err.count("\n") == 1


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["molecule"])
    assert exc.value.code == 2


def test_enumerate_text_golden(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "3")
    assert code == 0
    assert out.splitlines() == [
        "k=3;chords=;base=pos",
        "k=3;chords=2-3;base=pos",
        "k=3;chords=1-2;base=pos",
        "k=3;chords=1-3;base=pos",
    ]


def test_enumerate_jsonl(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "4", "--chords", "2", "--format", "jsonl")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 3
    for rec in records:
        assert rec["k"] == 4
        assert len(rec["chords"]) == 2
        assert rec["base"] == "pos"


def test_invariants_close_up_golden(capsys):
    code, out, _ = run(capsys, "invariants", "--diagram", GENUS1, "--close-up")
    assert code == 0
    data = json.loads(out)
    assert data["orientable"] is True
    assert data["genus"] == 1
    assert data["boundary"] == 1
    assert data["closeable"] is True
    assert data["full_ways"] == 2


def test_invariants_open_atom(capsys):
    code, out, _ = run(capsys, "invariants", "--diagram", "k=5;chords=;base=pos")
    assert code == 0
    data = json.loads(out)
    assert data["closeable"] is False
    assert data["euler"] == 1


def test_invariants_close_up_failure_is_domain_error(capsys):
    code, _, err = run(capsys, "invariants", "--diagram", "k=5;chords=;base=pos", "--close-up")
    assert code == 1
    assert "NotCloseable" in err


def test_invariants_bad_diagram(capsys):
    code, _, err = run(capsys, "invariants", "--diagram", "k=3;chords=1-1")
    assert code == 1
    assert err.startswith("error:")


def test_classify_golden(capsys):
    code, out, _ = run(capsys, "classify", "--genus", "2", "--mode", "fatom")
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary == {
        "count": 8,
        "genus": 2,
        "group_used": "reflection",
        "mode": "fatom",
    }


def test_classify_jsonl_lists_representatives(capsys):
    code, out, _ = run(capsys, "classify", "--genus", "1", "--mode", "atom", "--jsonl")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2  # one representative plus the summary
    rep = json.loads(lines[0])
    assert rep["k"] == 5


def test_classify_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("ATOMFORGE_THREADS", "2")
    code, out, _ = run(capsys, "classify", "--genus", "2", "--mode", "atom")
    assert code == 0
    assert json.loads(out.strip().splitlines()[-1])["count"] == 5


def test_classify_bad_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("ATOMFORGE_THREADS", "zero")
    code, _, err = run(capsys, "classify", "--genus", "1", "--mode", "atom")
    assert code == 1
    assert "ATOMFORGE_THREADS" in err


def test_canon_golden(capsys):
    code, out, _ = run(capsys, "canon", "--diagram", GENUS1, "--mode", "atom")
    assert code == 0
    assert out.strip() == "k=5;chords=1-4,2-5;base=pos"


def test_canon_is_idempotent(capsys):
    code, once, _ = run(capsys, "canon", "--diagram", GENUS1, "--mode", "fatom")
    assert code == 0
    code, twice, _ = run(capsys, "canon", "--diagram", once.strip(), "--mode", "fatom")
    assert code == 0
    assert once == twice


def test_local_golden(capsys):
    code, out, _ = run(capsys, "local", "--k", "3")
    assert code == 0
    data = json.loads(out)
    assert data["coefficients"] == [1, -3]
    assert data["rays"] == ["1/6", "1/2", "5/6"]
    assert data["sector_signs"] == [1, -1, 1, -1]


def test_render_writes_file(capsys, tmp_path):
    target = tmp_path / "diagram.svg"
    code, out, _ = run(capsys, "render", "--diagram", GENUS1, "--out", str(target))
    assert code == 0
    assert out.strip() == str(target)
    assert target.stat().st_size > 0


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "classify", "--genus", "2", "--mode", "fatom", "--jsonl")
    _, second, _ = run(capsys, "classify", "--genus", "2", "--mode", "fatom", "--jsonl")
    assert first == second
