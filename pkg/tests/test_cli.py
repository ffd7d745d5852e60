import json

import pytest

from cli import main
from graph_core import write_graph_file
from utils.file_handler import load_report
from verify import path_with_chords


@pytest.fixture
def c6_file(tmp_path, c6):
    return write_graph_file(c6, str(tmp_path / "c6.txt"))


@pytest.fixture
def c7_file(tmp_path, c7):
    return write_graph_file(c7, str(tmp_path / "c7.txt"))


def last_json(capsys):
    return json.loads(capsys.readouterr().out.strip().splitlines()[-1])


def test_build_then_count(tmp_path, c7_file, capsys):
    pickled = str(tmp_path / "c7.oracle")
    assert main(["build", "-g", c7_file, "-o", pickled, "--json"]) == 0
    assert last_json(capsys)["n"] == 7
    assert main(["count", "--oracle", pickled, "-f", "2,4,6", "--json"]) == 0
    assert last_json(capsys) == {"components": 3}


def test_query_single_pair(c6_file, capsys):
    assert main(["query", "-g", c6_file, "-f", "2,5", "-s", "1", "-t", "3"]) == 0
    assert capsys.readouterr().out.strip() == "disconnected"


def test_query_many_pairs(c6_file, capsys):
    assert main(["query", "-g", c6_file, "-f", "2,5", "-q", "3,4", "-q", "1,6", "--json"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [json.loads(line) for line in lines] == [{"connected": True}, {"connected": True}]


def test_cut(tmp_path, capsys):
    path = write_graph_file(path_with_chords(3), str(tmp_path / "p3.txt"))
    assert main(["cut", "-g", path, "-f", "2"]) == 0
    assert capsys.readouterr().out.strip() == "cut"


@pytest.mark.parametrize("argv", [
    ["count", "-f", "1"],
    ["count", "-g", "x.txt", "-f", "1,2,3,4"],
    ["count", "-g", "x.txt", "-f", "a,b"],
    ["query", "-g", "x.txt", "-f", "1", "-s", "2"],
    ["query", "-g", "x.txt", "-f", "1"],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_missing_graph_file(tmp_path, capsys):
    assert main(["count", "-g", str(tmp_path / "none.txt"), "-f", "1"]) == 1
    assert "error" in capsys.readouterr().err


def test_bad_failure_vertex(c6_file, capsys):
    assert main(["count", "-g", c6_file, "-f", "9"]) == 1
    assert "not a vertex" in capsys.readouterr().err


def test_verify_smoke(tmp_path, capsys):
    report_path = str(tmp_path / "report.json")
    assert main(["verify", "--corpus", "smoke", "--json", "-o", report_path]) == 0
    report = last_json(capsys)
    assert report["mismatches"] == 0
    assert load_report("report.json", folder=str(tmp_path))["graphs"] == report["graphs"]


def test_verify_mutation(capsys):
    assert main(["verify", "--corpus", "smoke", "--mutations", "skip_isolated_count", "--json"]) == 0
    assert last_json(capsys) == {"mutations": {"skip_isolated_count": True}}


def test_bench(capsys):
    assert main(["bench", "--sizes", "20", "40", "--queries", "30", "--json"]) == 0
    report = last_json(capsys)
    assert [row["n"] for row in report["rows"]] == [20, 40]


def test_bench_threads(capsys):
    assert main(["bench", "--sizes", "20", "30", "40", "--queries", "10", "--threads", "3", "--json"]) == 0
    report = last_json(capsys)
    assert report["config"]["threads"] == 3
    assert [row["n"] for row in report["rows"]] == [20, 30, 40]


def test_bench_rejects_zero_threads(capsys):
    assert main(["bench", "--sizes", "20", "--threads", "0"]) == 1
    assert "threads" in capsys.readouterr().err
