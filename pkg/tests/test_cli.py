import json
import subprocess
import sys

import pytest

from bugscope.cli import main, parse_family_params
from bugscope.constructions import inflated_cycles_cobug
from bugscope.errors import GraphFormatError
from bugscope.graph import complete_graph, disjoint_union, path_graph, petersen_graph, star_graph
from bugscope.io import to_edge_list, to_graph6, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in {
        "petersen.g6": petersen_graph(),
        "k5.g6": complete_graph(5),
        "p4.txt": path_graph(4),
        "stars.g6": disjoint_union(*[star_graph(2)] * 3),
        "mixed.txt": disjoint_union(star_graph(2), star_graph(3)),
    }.items():
        write_graph(tmp_path / name, g)
        paths[name] = str(tmp_path / name)
    return paths


def test_analyze(capsys, files):
    code, doc = run(capsys, "analyze", files["petersen.g6"])
    assert code == 0 and doc["schema"] == "bugscope/1"
    assert doc["result"]["is_uniform"] and doc["result"]["average"] == "3"
    _, doc = run(capsys, "analyze", files["p4.txt"])
    assert not doc["result"]["is_uniform"]
    _, doc = run(capsys, "analyze", files["k5.g6"])
    assert doc["result"]["average"] == "0"


def test_analyze_errors(capsys, tmp_path, files):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n0 q\n")
    assert main(["analyze", str(bad)]) == 2
    assert "line 3" in capsys.readouterr().err
    assert main(["analyze", files["mixed.txt"]]) == 2
    assert main(["analyze", str(tmp_path / "missing.g6")]) == 2


def test_certify(capsys, files):
    code, doc = run(capsys, "certify", files["stars.g6"], "--expect-cobug", "--expect-not-exotic")
    r = doc["result"]
    assert code == 0 and r["is_cobug"] and r["betweenness"] == "2/3" and not r["exotic"]
    code, doc = run(capsys, "certify", files["mixed.txt"])
    assert code == 0 and not doc["result"]["is_cobug"]
    code, doc = run(capsys, "certify", files["mixed.txt"], "--expect-cobug")
    assert code == 1 and doc["result"]["expectations_failed"]
    code, _ = run(capsys, "certify", files["stars.g6"], "--expect-betweenness", "2/3")
    assert code == 0
    code, _ = run(capsys, "certify", files["stars.g6"], "--expect-exotic")
    assert code == 1


def test_text_format_is_projection(capsys, files):
    code, text = run(capsys, "certify", files["stars.g6"], "--format", "text")
    assert code == 0
    assert "result.betweenness: 2/3" in text.splitlines()
    assert "schema: bugscope/1" in text


def test_output_file(capsys, tmp_path, files):
    out = tmp_path / "report.json"
    assert main(["analyze", files["petersen.g6"], "-o", str(out)]) == 0
    assert json.loads(out.read_text())["result"]["average"] == "3"


FAMILY_CASES = [
    ("stars", ["3", "2"], "2/3"),
    ("stars", ["2", "3"], "3/4"),
    ("cycles", ["4,4"], "1"),
    ("cycles", ["5,7"], "1"),
    ("multipartite", ["1,1,2"], "1"),
    ("multipartite", ["3", "3"], "1"),
    ("above-one", ["2"], "9/8"),
]


@pytest.mark.parametrize("family,params,value", FAMILY_CASES)
def test_construct_round_trip(capsys, tmp_path, family, params, value):
    path = tmp_path / "g.g6"
    code, doc = run(capsys, "construct", family, *params, "--graph-out", str(path))
    assert code == 0 and doc["result"]["predicted_betweenness"] == value
    code, doc = run(capsys, "certify", str(path), "--expect-cobug", "--expect-betweenness", value)
    assert code == 0 and doc["result"]["betweenness"] == value


def test_construct_inline_and_errors(capsys):
    code, doc = run(capsys, "construct", "stars", "2", "1", "--certify")
    assert code == 0 and doc["result"]["graph6"] == "C`" and doc["result"]["prediction_matches"]
    assert main(["construct", "stars", "1", "3"]) == 2
    assert main(["construct", "cycles", "3,4"]) == 2
    assert main(["construct", "stars", "x"]) == 2
    with pytest.raises(GraphFormatError):
        parse_family_params(["1,a"])
    assert parse_family_params(["4,4", "5"]) == [4, 4, 5]


def test_scan(capsys):
    code, doc = run(capsys, "scan", "--n-max", "5")
    assert code == 0
    assert "1/2" in doc["result"]["values"]
    assert all(not (0 < eval(v) < 0.5) for v in doc["result"]["values"])


def test_search_and_caps(capsys):
    code, doc = run(capsys, "search", "--ell-min", "0", "--ell-max", "2", "--cap", "6", "--deterministic")
    assert code == 0 and doc["result"]["found"] == [] and doc["result"]["exhausted"]
    assert doc["result"]["accounted"]
    assert main(["search", "--cap", "9"]) == 0  # scoped: not exhausted, still runs to completion
    assert capsys.readouterr().out
    assert main(["scan", "--n-max", "9"]) == 3
    assert main(["verify-lemmas", "--n-max", "9"]) == 3


def test_search_parallel_matches_serial(capsys):
    args = ["search", "--ell-min", "0", "--ell-max", "3", "--cap", "7"]
    _, a = run(capsys, *args, "--jobs", "2")
    _, b = run(capsys, *args, "--deterministic")
    assert a["result"] == b["result"]


def test_verify_lemmas_deterministic(capsys):
    _, a = run(capsys, "verify-lemmas", "--n-max", "5", "--ell-max", "4")
    _, b = run(capsys, "verify-lemmas", "--n-max", "5", "--ell-max", "4")
    assert a["result"]["all_passed"]
    a.pop("meta"), b.pop("meta")
    assert json.dumps(a) == json.dumps(b)


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "bugscope", "analyze", files["k5.g6"]],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["result"]["average"] == "0"


def test_inflated_must_use_edge_list(capsys, tmp_path):
    assert main(["construct", "inflated", "721", "--graph-format", "graph6"]) == 3


@pytest.mark.slow
def test_certify_inflated_file(capsys, tmp_path):
    path = tmp_path / "inflated.txt"
    code, doc = run(capsys, "construct", "inflated", "360,361", "--graph-out", str(path))
    assert code == 0 and doc["result"]["graph_format"] == "edges"
    code, doc = run(capsys, "certify", str(path), "--no-structure", "--expect-betweenness", "13/4")
    assert code == 0 and doc["result"]["is_cobug"]
    assert doc["result"]["co_betweenness"] == "3924/333467"
