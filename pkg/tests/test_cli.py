import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqsw.cli import main
from eqsw.jobs import DOCUMENT, SCHEMA_VERSION

TRIVIAL3 = {"b_plus": 0, "b0": 0, "d": [0, 0, 0], "hplus_weights": [0, 0, 0]}

ALL_TASKS = [
    {"task": "localize_zp", "p": 3, "action": {"b_plus": 9, "b0": 3, "d": [2, 2, 2], "hplus_weights": [0, 3, 0]}, "reduced": [1, 1, 1], "request": 2},
    {"task": "localize_k", "n": 4, "d": [1, 1, 1, 1], "hplus_weights": [0, 1, 1, 1], "reduced": [2, 2, 2, 2], "k": 1},
    {"task": "wall_cross", "n": 3, "action": {"b_plus": 1, "b0": 1, "d": [1, 1, 0]}, "m": 2},
    {"task": "charge_conjugate", "n": 3, "d": 2, "b_plus": 3, "table": [{"request": 1, "terms": [[0, 1, 2]]}]},
    {"task": "mod2_spin", "action": {"b_plus": 3, "b0": 1, "d": [2, 0]}, "m": 0, "b_neg": 19},
    {"task": "psc", "b0": 1, "pairing": 0},
    {"task": "transversality", "p": 3, "d": [1, 1, 1], "b_weights": [1, 1, 1]},
    {"task": "kahler", "n": 3, "V0": [0, 1, 0], "V1": [0, 0, 0], "V2": [0, 1, 0], "H2O": [1, 0, 0], "m": 2},
    {"task": "k3", "n": 3, "c1_is_11": True, "c1_zero": True, "acts_trivially_on_k": False, "m": 2, "line_weight": 1, "canonical_weight": 1},
    {"task": "glue", "n": 3, "coefficients": "mod_p", "theta": 1,
     "side1": {"b_plus": 3, "b0": 1, "d": [2, 1, 1], "hplus_weights": [0, 1, 0], "table": {"1": [[0, 1, 2]], "2": [[0, 2, 1]]}},
     "side2": {"b_plus": 0, "b0": 0, "d": [0, -1, 0], "hplus_weights": [0, 0, 0]}},
    {"task": "connect_sum_zp", "p": 3, "x_side": TRIVIAL3, "d_y": 2, "b_plus_y": 3, "sw_y": 1, "m": 2},
    {"task": "p_copies", "p": 3, "d_y": 2, "b_plus_y": 3, "sw_y": 1, "m": 2},
    {"task": "divisibility", "b_plus": 3, "d": 4, "p": 3},
    {"task": "constraint_zp", "p": 3, "b0": 5, "d": [0, 5, 5], "sw_mod_p_nonzero": True},
    {"task": "fang", "group_order": 5, "pairs": [[2, 3]]},
    {"task": "free_congruence", "n": 4, "quotient_sums": {"1": 70, "2": 6, "4": 2}},
    {"task": "extension_dp", "p": 3, "orientation": "preserves", "copies": {"d_y": 2, "b_plus_y": 3, "sw_y": 1}},
    {"task": "burnside", "n": 4, "op": "sw", "a": [[2, 1, 1]], "m": 1},
]


def run_cli(argv, stdin="", capsys=None, monkeypatch=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin="": run_cli(argv, stdin, capsys, monkeypatch)


def doc(*jobs):
    return json.dumps({"jobs": list(jobs)})


def test_every_task_runs(cli):
    code, out, _ = cli(["run", "-"], doc(*ALL_TASKS))
    report = json.loads(out)
    assert code == 0 and report["status"] == 0
    assert report["schema_version"] == SCHEMA_VERSION
    assert [r["task"] for r in report["results"]] == [j["task"] for j in ALL_TASKS]
    assert all(r["ok"] for r in report["results"]), [r for r in report["results"] if not r["ok"]]


def test_known_answers(cli):
    _, out, _ = cli(["run", "-"], doc(*ALL_TASKS))
    res = {r["task"]: r["result"] for r in json.loads(out)["results"]}
    assert res["constraint_zp"]["verdict"]["conclusion"] == "obstructed"
    assert res["constraint_zp"]["verdict"]["statement"] == "no i with d_i in [3,4]"
    assert res["p_copies"]["value"] == "2*v"
    assert res["burnside"]["value"] == "2*v"
    assert res["divisibility"]["verdict"]["conclusion"] == "forced_congruence"
    assert res["free_congruence"]["verdict"]["conclusion"] == "consistent"
    assert res["extension_dp"]["verdict"]["conclusion"] == "obstructed"
    assert res["localize_k"]["rational"] == "8"
    assert res["localize_zp"]["value"] == "2*v"
    assert res["mod2_spin"]["value"] == "1"


def test_empty_document(cli):
    code, out, _ = cli(["run", "-"], doc())
    assert code == 0 and json.loads(out)["results"] == []


def test_validation_errors_exit_2(cli):
    code, out, _ = cli(["run", "-"], doc({"task": "p_copies", "p": 3}))
    assert code == 2
    locs = {d["location"] for d in json.loads(out)["error"]["diagnostics"]}
    assert "jobs[0].p_copies.d_y" in locs
    assert cli(["run", "-"], doc({"task": "nope"}))[0] == 2
    assert cli(["run", "-"], "not json")[0] == 2
    assert cli(["run", "-"], doc({**ALL_TASKS[11], "extra": 1}))[0] == 2
    assert cli(["run", "/nonexistent/jobs.json"])[0] == 2


def test_invalid_data_inside_job_exits_2(cli):
    code, out, _ = cli(["run", "-"], doc(ALL_TASKS[11], {**ALL_TASKS[11], "p": 4}))
    report = json.loads(out)
    assert code == 2 and report["status"] == 2
    assert report["results"][0]["ok"] and not report["results"][1]["ok"]
    assert report["results"][1]["error"]["kind"] == "InvalidDataError"


def test_inconsistent_data_exits_3(cli):
    bad = {"task": "localize_zp", "p": 2, "action": {"b_plus": 1, "b0": 1, "d": [2, 1]}, "reduced": [1, 0], "request": 0}
    code, out, _ = cli(["run", "-"], doc(bad, {**ALL_TASKS[11], "p": 4}))
    assert code == 3 and json.loads(out)["status"] == 3


def test_group_order_bound(cli):
    job = {**ALL_TASKS[11], "p": 7}
    assert cli(["run", "-", "--max-group-order", "5"], doc(job))[0] == 2
    assert cli(["run", "-", "--max-group-order", "7"], doc(job))[0] == 0


def test_text_output(cli):
    code, out, _ = cli(["run", "-", "--output", "text"], doc(ALL_TASKS[13], ALL_TASKS[11]))
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == f"schema_version {SCHEMA_VERSION}"
    assert lines[1] == "[0] constraint_zp: obstructed (no i with d_i in [3,4])"
    assert lines[2] == "[1] p_copies: 2*v"


def test_verify_flag(cli):
    code, out, _ = cli(["run", "-", "--verify"], doc(ALL_TASKS[11]))
    assert code == 0 and json.loads(out)["results"][0]["ok"]


def test_byte_identical_reruns(cli):
    first = cli(["run", "-"], doc(*ALL_TASKS))[1]
    assert cli(["run", "-"], doc(*ALL_TASKS))[1] == first


@settings(max_examples=15, deadline=None)
@given(st.permutations(range(len(ALL_TASKS))))
def test_results_independent_of_job_order(order):
    report, _ = __import__("eqsw.jobs", fromlist=["run_jobs"]).run_jobs(DOCUMENT.validate_json(doc(*ALL_TASKS)))
    shuffled, _ = __import__("eqsw.jobs", fromlist=["run_jobs"]).run_jobs(
        DOCUMENT.validate_json(doc(*[ALL_TASKS[i] for i in order]))
    )
    base = {r["index"]: r["result"] for r in report["results"]}
    for pos, i in enumerate(order):
        assert shuffled["results"][pos]["result"] == base[i]


def test_input_round_trips(cli):
    # echoed inputs form a valid document that reproduces the same results
    _, out, _ = cli(["run", "-"], doc(*ALL_TASKS))
    report = json.loads(out)
    again = cli(["run", "-"], doc(*[r["input"] for r in report["results"]]))[1]
    assert json.loads(again)["results"] == report["results"]


def test_console_script(tmp_path):
    path = tmp_path / "jobs.json"
    path.write_text(doc(ALL_TASKS[11]))
    proc = subprocess.run([sys.executable, "-m", "eqsw.cli", "run", str(path)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"][0]["result"]["value"] == "2*v"
    usage = subprocess.run([sys.executable, "-m", "eqsw.cli", "run"], capture_output=True, text=True)
    assert usage.returncode == 2
