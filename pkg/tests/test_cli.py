import json

import pytest

from orbitq.cli import run


@pytest.fixture
def capout(capsys):
    def grab():
        return capsys.readouterr()
    return grab


def test_table_single_case_json(capout):
    assert run(["table", "--case", "E6:6", "--format", "json"]) == 0
    rows = json.loads(capout().out)
    assert len(rows) == 1
    row = rows[0]
    assert row["case_id"] == "E6:6"
    assert row["twist"] == "L0"
    assert row["r0"] == "5/2"
    assert row["a"] == "3/2"
    assert row["b"] == "2/1"
    assert row["valid"] is True
    assert row["vacuum_label"] == "C"
    assert row["alpha"] == 5


def test_table_e88_csv_golden_line(capout):
    assert run(["table", "--case", "E8:8", "--format", "csv"]) == 0
    lines = capout().out.splitlines()
    assert lines[0] == "case_id,twist,r0,a,b,valid,vacuum_label,alpha,pi1_order"
    assert lines[1] == "E8:8,L0,7/1,3/1,5/1,true,C,14,1"


def test_table_sl3_two_rows(capout):
    assert run(["table", "--case", "SL:3", "--format", "json"]) == 0
    rows = json.loads(capout().out)
    assert len(rows) == 2
    assert rows[0]["valid"] is True and rows[1]["valid"] is False
    assert rows[1]["a"] == "*" and rows[1]["b"] == "*"


def test_table_no_bundle_case(capout):
    assert run(["table", "--case", "SO:4,5", "--format", "json"]) == 0
    grabbed = capout()
    assert json.loads(grabbed.out) == []
    assert "no half-form bundle" in grabbed.err


def test_table_sweep_deterministic(capout):
    assert run(["table", "--all", "--format", "csv"]) == 0
    first = capout().out
    assert run(["table", "--all", "--format", "csv"]) == 0
    assert capout().out == first
    assert first.splitlines()[0].startswith("case_id,")


def test_cases_listing(capout):
    assert run(["cases", "--format", "csv"]) == 0
    import csv as _csv
    rows = list(_csv.reader(capout().out.splitlines()))
    assert rows[0] == ["id", "blocks", "m", "G"]
    ids = [r[0] for r in rows[1:]]
    assert ids[0] == "E6:6" and "SO:3,3" in ids and "SL:12" in ids


def test_verify_oscillator(capout):
    assert run(["verify", "--model", "osc1", "--levels", "3",
                "--format", "json"]) == 0
    status = json.loads(capout().out)
    assert status["rank"] == 3 and status["closed"] and status["stable"]


def test_norms_and_kernel(capout):
    assert run(["norms", "--case", "SO:4,4", "--n", "3",
                "--format", "json"]) == 0
    rows = json.loads(capout().out)
    assert [r["norm"] for r in rows] == ["1/2", "1/3", "1/4"]
    assert run(["kernel", "--case", "E6:6", "--terms", "1",
                "--format", "json"]) == 0
    rows = json.loads(capout().out)
    assert rows == [{"n": 0, "p_n": "1/1"}, {"n": 1, "p_n": "7/6"}]


def test_norms_invalid_bundle_exits_1(capout):
    assert run(["norms", "--case", "SL:3", "--twist", "f0L0"]) == 1
    assert "fails" in capout().err


def test_matcoef(capout):
    assert run(["matcoef", "--case", "SO:4,4", "--t", "0", "--terms", "5",
                "--format", "json"]) == 0
    payload = json.loads(capout().out)
    assert payload["partial_sum"] == "1/1"
    assert payload["y_surrogate"] == "0/1"
    # big t drives sinh^2 t past the disc of convergence
    assert run(["matcoef", "--case", "SO:4,4", "--t", "5"]) == 2


def test_gram_oscillator(capout):
    assert run(["gram", "--model", "osc1", "--levels", "3",
                "--format", "json"]) == 0
    payload = json.loads(capout().out)
    assert payload["positive_definite"] and payload["well_defined"]
    # reported norms are for the n!-normalized rung sections: 1/n!
    assert payload["hw_norms"] == ["1/1", "1/1", "1/2", "1/6"]


def test_invalid_inputs_exit_2(capout):
    assert run(["table", "--case", "SO:2,4"]) == 2
    assert run(["verify", "--model", "f4"]) == 2
    assert run(["bogus"]) == 2
    capout()
