import json
import subprocess
import sys

import pytest

from lengthpoly.cli import RunConfig, main, parse_order, run
from lengthpoly.errors import InvalidOrder

EIGHT_JSON = json.dumps({"ascent": [0, 1, 2, 2, 0, 2, 2, 3]})

EIGHT_ROWS_MARKDOWN = [
    "0 ≤ ρ1",
    "0 ≤ ρ2",
    "0 ≤ ρ3",
    "0 ≤ ρ4",
    "1 ≤ ρ6",
    "1 ≤ ρ7",
    "1 ≤ ρ8",
    "2 + ρ2 ≤ ρ5",
    "3 + ρ2 + ρ6 ≤ ρ5 + ρ7 + ρ8",
    "3 + ρ2 + ρ7 ≤ ρ5 + ρ6 + ρ8",
]


def cells(markdown):
    rows = [ln for ln in markdown.splitlines() if ln.startswith("|")][2:]
    return [[c.strip() for c in ln.strip("|").split("|")] for ln in rows]


def test_canonical_single():
    code, out, err = run(RunConfig("canonical"), '{"ascent":[0]}')
    assert code == 0 and err == ""
    assert json.loads(out) == {"n": 1, "magnitude": 1, "canonical": [[0, 0]]}


def test_schrijver_markdown():
    code, out, _ = run(RunConfig("schrijver", fmt="markdown"), EIGHT_JSON)
    assert code == 0
    rows = cells(out)
    assert [r[1] for r in rows] == EIGHT_ROWS_MARKDOWN
    assert rows[0][2] == "->r ρ1 ->r"
    assert rows[7][2] == "->r ρ1 ->b ρ2 ->b ρ6 ->r ρ5 ->r"


def test_schrijver_json_counts_and_witnesses():
    code, out, _ = run(RunConfig("schrijver", witnesses=True), EIGHT_JSON)
    d = json.loads(out)
    assert d["counts"] == {"cycles": 25, "distinct": 17, "irredundant": 10, "redundant": 7}
    assert all("witness" in r for r in d["redundant"])
    for r in d["redundant"]:
        for t in r["witness"]["terms"]:
            assert isinstance(t["coeff"], int) and t["coeff"] > 0


def test_schrijver_csv():
    code, out, _ = run(RunConfig("schrijver", fmt="csv"), EIGHT_JSON)
    lines = out.splitlines()
    assert lines[0] == "gamma,A,B"
    assert lines[-1] == "3,2 7,5 6 8"
    assert len(lines) == 11


def test_pm_report():
    code, out, _ = run(RunConfig("pm", m=2))
    d = json.loads(out)
    assert code == 0
    assert (d["cycles"], d["irredundant"]) == (35, 19)


def test_keygraph_formats():
    code, dot, _ = run(RunConfig("keygraph", fmt="dot"), EIGHT_JSON)
    assert code == 0 and dot.count("->") == 21
    code, out, _ = run(RunConfig("keygraph"), EIGHT_JSON)
    assert len(json.loads(out)["arcs"]) == 21


def test_cycles_and_weaklist():
    _, out, _ = run(RunConfig("cycles"), EIGHT_JSON)
    assert len(json.loads(out)["cycles"]) == 25
    _, out, _ = run(RunConfig("weaklist", fmt="csv"), EIGHT_JSON)
    assert len(out.splitlines()) == 18


def test_intervals_and_relations_inputs():
    code, out, _ = run(RunConfig("canonical"), '{"intervals": [[0, 0], [5, 9]]}')
    assert json.loads(out)["canonical"] == [[0, 0], [1, 1]]
    code, out, _ = run(RunConfig("canonical"), '{"n": 2, "relations": [[1, 2]]}')
    assert json.loads(out)["canonical"] == [[0, 0], [1, 1]]


def test_domain_error_exit_code():
    code, out, err = run(RunConfig("canonical"), '{"n": 4, "relations": [[1, 2], [3, 4]]}')
    assert code == 1 and out == ""
    d = json.loads(err)
    assert d["error"] == "not_an_interval_order"
    assert d["witness"] == [1, 2, 3, 4]


def test_bad_json_and_unknown_shape():
    assert run(RunConfig("canonical"), "not json")[0] == 1
    assert run(RunConfig("canonical"), '{"foo": 1}')[0] == 1
    with pytest.raises(InvalidOrder):
        parse_order("[1, 2]")


def test_unsupported_format():
    code, _, err = run(RunConfig("canonical", fmt="dot"), EIGHT_JSON)
    assert code == 1 and json.loads(err)["error"] == "usage_error"


def test_budget_exit_code():
    code, out, err = run(RunConfig("cycles", cycle_budget=1), EIGHT_JSON)
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "cycle_budget_exceeded"


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig("nope")
    with pytest.raises(ValueError):
        RunConfig("cycles", cycle_budget=0)


def test_deterministic_output():
    a = run(RunConfig("schrijver", witnesses=True), EIGHT_JSON)
    b = run(RunConfig("schrijver", witnesses=True), EIGHT_JSON)
    assert a == b


def test_verify_small_corpus():
    code, out, _ = run(RunConfig("verify", max_n=3))
    assert code == 0
    recs = [json.loads(ln) for ln in out.splitlines()]
    assert len(recs) == 8 and all(r["pass"] for r in recs)


def test_bench_table():
    code, out, _ = run(RunConfig("bench", max_n=3, fmt="csv"))
    assert code == 0
    assert out.splitlines()[0] == "n,orders,cycles,irredundant,seconds,ms_per_order"


def test_main_with_env_budget(tmp_path, monkeypatch, capsys):
    path = tmp_path / "fig.json"
    path.write_text(EIGHT_JSON, encoding="utf-8")
    monkeypatch.setenv("SCHRIJVER_CYCLE_BUDGET", "3")
    assert main(["cycles", "--input", str(path)]) == 2
    assert "cycle_budget_exceeded" in capsys.readouterr().err
    assert main(["cycles", "--input", str(path), "--cycle-budget", "100"]) == 0
    assert len(json.loads(capsys.readouterr().out)["cycles"]) == 25
    monkeypatch.delenv("SCHRIJVER_CYCLE_BUDGET")
    assert main(["canonical", "--input", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["magnitude"] == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lengthpoly", "pm", "--m", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["irredundant"] == 9
