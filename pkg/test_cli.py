"""
Roman Domination Engine
Tests for the command-line interface and its exit codes
"""

import json

import pytest

from roman_domination_core import catalogue
from roman_domination_core.cli import EXIT_DNF, EXIT_NO, EXIT_OK, EXIT_USAGE, run
from roman_domination_core.config import Settings
from roman_domination_core.exceptions import ParameterError
from roman_domination_core.graph import cycle_graph, path_graph, save_graph
from roman_domination_core.labeling import RomanLabeling, save_labeling


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    save_graph(cycle_graph(4), path)
    return str(path)


def test_solve_prints_optimum_and_witness(c4_file, capsys):
    assert run(["solve", "--input", c4_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "rd optimum = 3" in out
    assert "witness: [2, 0, 1, 0]" in out


def test_solve_json_report(c4_file, capsys, tmp_path):
    target = tmp_path / "result.json"
    assert run(["solve", "--objective", "grd", "--input", c4_file, "--output", str(target)]) == EXIT_OK
    assert "grd optimum = 4" in target.read_text()
    assert run(["solve", "--objective", "ds", "--input", c4_file]) == EXIT_OK
    assert "ds optimum = 2" in capsys.readouterr().out


def test_decide_exit_codes(split_yes, tmp_path, capsys):
    path = tmp_path / "split.json"
    save_graph(split_yes.graph, path, fmt="json")
    common = ["--objective", "grd", "--format", "json", "--input", str(path)]
    assert run(["decide", "--budget", "9"] + common) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["answer"] == "yes"
    assert run(["decide", "--budget", "8"] + common) == EXIT_NO
    assert json.loads(capsys.readouterr().out)["answer"] == "no"


def test_verify_reports_validity(c4_file, tmp_path, capsys):
    ones = tmp_path / "ones.json"
    save_labeling(RomanLabeling.all_ones(4), ones)
    assert run(["verify", "--labeling", str(ones), "--input", c4_file]) == EXIT_OK
    assert "valid GRDF (weight 4)" in capsys.readouterr().out

    bad = tmp_path / "bad.json"
    save_labeling(RomanLabeling.from_values([2, 0, 1, 0]), bad)
    assert run(["verify", "--labeling", str(bad), "--input", c4_file]) == EXIT_NO
    assert "invalid GRDF" in capsys.readouterr().out
    assert run(["verify", "--labeling", str(bad), "--mode", "rd", "--input", c4_file]) == EXIT_OK


def test_cograph_command(c4_file, tmp_path, capsys):
    assert run(["cograph", "--witness", "--input", c4_file]) == EXIT_OK
    assert "witness:" in capsys.readouterr().out
    p4 = tmp_path / "p4.txt"
    save_graph(path_graph(4), p4)
    assert run(["cograph", "--input", str(p4)]) == EXIT_USAGE


def test_cograph_on_the_empty_graph(tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"n": 0, "edges": []}))
    assert run(["cograph", "--witness", "--show-tree", "--format", "json", "--input", str(empty)]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["values"]["gamma_gr"] == 0 and data["witness"] == [] and data["cotree"] is None


def test_usage_errors(tmp_path):
    assert run([]) == EXIT_USAGE
    assert run(["gen", "--kind", "cubic", "--n", "5"]) == EXIT_USAGE
    assert run(["solve", "--input", str(tmp_path / "missing.txt")]) == EXIT_USAGE
    assert run(["solve", "--jobs", "0", "--input", str(tmp_path / "missing.txt")]) == EXIT_USAGE


@pytest.mark.parametrize("name", ["ROMAN_JOBS", "ROMAN_SEED", "ROMAN_TIME_BUDGET_MS"])
def test_malformed_environment_is_a_usage_error(monkeypatch, name):
    monkeypatch.setenv(name, "many")
    with pytest.raises(ParameterError):
        Settings.from_env()
    assert run(["gen", "--kind", "cubic", "--n", "6"]) == EXIT_USAGE


def test_gen_prints_an_edge_list(capsys):
    assert run(["gen", "--kind", "cubic", "--n", "6", "--seed", "4"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "6 9"


def test_reduce_writes_json(tmp_path):
    source = tmp_path / "x3c.json"
    source.write_text(json.dumps(catalogue.SPLIT_YES_X3C.to_dict()))
    target = tmp_path / "split.json"
    assert run(["reduce", "--name", "split", "--input", str(source), "--output", str(target)]) == EXIT_OK
    data = json.loads(target.read_text())
    assert data["budget"] == 9 and data["graph"]["n"] == 16


def test_time_budget_exhaustion(gadget_unit, tmp_path):
    path = tmp_path / "gadget.txt"
    save_graph(gadget_unit.graph, path)
    assert run(["solve", "--objective", "grd", "--time-budget-ms", "1", "--input", str(path)]) == EXIT_DNF


def test_lemmas_command(capsys):
    assert run(["lemmas", "--scale", "smoke", "--only", "x4cproof"]) == EXIT_OK
    assert "x4cproof" in capsys.readouterr().out
