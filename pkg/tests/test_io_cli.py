import io
import json
import subprocess
import sys

import jsonschema
import pytest

from forcelab import schemas
from forcelab.cli import main, parse_range
from forcelab.constructions import peony_construction_set
from forcelab.forcing import is_zero_forcing_set
from forcelab.forts import fort_type1
from forcelab.generators import PeonyParams, WebParams, make_peony, make_web
from forcelab.io import (
    GraphFormatError,
    format_edge_list,
    graph_from_json,
    graph_to_json,
    parse_edge_list,
    read_graph,
    write_graph,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, schema, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    return code, doc


@pytest.fixture
def graph_file(tmp_path):
    def make(family, *params):
        path = tmp_path / f"{family}{'_'.join(map(str, params))}.txt"
        assert main(["gen", family, *map(str, params), "--out", str(path)]) == 0
        return str(path)

    return make


# I/O ------------------------------------------------------------------------------------

def test_edge_list_round_trip(tmp_path):
    g = make_peony(PeonyParams(3, 2, 2))
    path = tmp_path / "py.txt"
    write_graph(g, str(path))
    assert (tmp_path / "py.txt.labels.json").exists()
    back = read_graph(str(path))
    assert back == g and back.labels == g.labels and back.name == g.name


def test_comment_directives_round_trip():
    g = make_web(WebParams(4, 2))
    back = parse_edge_list(format_edge_list(g))
    assert back == g and back.labels == g.labels


def test_json_round_trip(tmp_path):
    g = make_web(WebParams(3, 1))
    doc = graph_to_json(g)
    jsonschema.validate(doc, schemas.GRAPH)
    assert graph_from_json(doc) == g
    path = tmp_path / "wb.json"
    path.write_text(json.dumps(doc))
    assert read_graph(str(path)) == g


def test_stdin_input():
    g = read_graph("-", stdin=io.StringIO("# a comment\n3 2\n0 1\n1 2\n"))
    assert g.n == 3 and g.num_edges == 2


@pytest.mark.parametrize(
    "text",
    ["", "3 2\n0 1\n", "3 1\n0 1\n1 2\n", "2 1\n0 x\n", "2 1\n0 1 2\n", "2 1\n0 5\n", "2 1\n1 1\n"],
)
def test_malformed_inputs(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_parse_range():
    assert parse_range("3..5") == [3, 4, 5]
    assert parse_range("3,7") == [3, 7]
    assert parse_range("4") == [4]


# gen ------------------------------------------------------------------------------------

def test_gen_peony_634(capsys):
    code, out, _ = run(capsys, "gen", "peony", "6", "3", "4")
    assert code == 0
    header = [line for line in out.splitlines() if not line.startswith("#")][0]
    assert header.split()[0] == "79"


def test_gen_web_and_path(capsys):
    _, out, _ = run(capsys, "gen", "web", "5", "3")
    assert parse_edge_list(out).n == 20
    _, out, _ = run(capsys, "gen", "path", "1")
    assert [line for line in out.splitlines() if not line.startswith("#")] == ["1 0"]


def test_gen_json(capsys):
    code, doc = run_json(capsys, schemas.GRAPH, "gen", "prism", "4", "2")
    assert code == 0 and doc["n"] == 8


def test_gen_bad_params_exit_two(capsys):
    code, _, err = run(capsys, "gen", "peony", "2", "3", "4")
    assert code == 2 and "m >= 3" in err
    code, _, err = run(capsys, "gen", "web", "5")
    assert code == 2


def test_gen_round_trip_keeps_invariants(graph_file):
    g = read_graph(graph_file("peony", 4, 2, 3))
    p = PeonyParams(4, 2, 3)
    assert g == make_peony(p)
    assert is_zero_forcing_set(g, peony_construction_set(p))


# closure --------------------------------------------------------------------------------

def test_closure_path_completes(capsys, graph_file):
    code, doc = run_json(capsys, schemas.CLOSURE, "closure", graph_file("path", 5), "--blue", "0")
    assert code == 0 and doc["complete"] and doc["steps"] == 4


def test_closure_cycle_stalls_with_fort(capsys, graph_file):
    code, doc = run_json(capsys, schemas.CLOSURE, "closure", graph_file("cycle", 5), "--blue", "0")
    assert code == 1 and not doc["complete"]
    assert len(doc["fort"]) == 4


def test_closure_peony_equality_set(capsys, graph_file):
    p = PeonyParams(3, 2, 1)
    blue = ",".join(map(str, peony_construction_set(p).to_list()))
    code, doc = run_json(
        capsys, schemas.CLOSURE, "closure", graph_file("peony", 3, 2, 1), "--blue", blue, "--trace"
    )
    assert code == 0
    jsonschema.validate(doc["trace"], schemas.CHRONOLOGY)


def test_closure_accepts_labels_and_policies(capsys, graph_file):
    path = graph_file("peony", 3, 2, 1)
    code, _, _ = run(capsys, "closure", path, "--blue", "c,u1,v1_2_1,v2_2_1,v3_1_1,v3_2_1", "--policy", "max-concurrent")
    assert code == 0
    code, _, _ = run(capsys, "closure", path, "--blue", "c,u1,v1_2_1,v2_2_1,v3_1_1,v3_2_1", "--policy", "random", "--seed", "4")
    assert code == 0


def test_closure_bad_ids_exit_two(capsys, graph_file, tmp_path):
    path = graph_file("path", 3)
    assert run(capsys, "closure", path, "--blue", "7")[0] == 2
    assert run(capsys, "closure", path, "--blue", "zz")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 5\n0 1\n")
    assert run(capsys, "closure", str(bad), "--blue", "0")[0] == 2


# solve ----------------------------------------------------------------------------------

@pytest.mark.parametrize(
    "family,params,z",
    [("web", (3, 1), 2), ("peony", (3, 2, 2), 6), ("prism", (4, 2), 4)],
)
@pytest.mark.parametrize("algorithm", ["fortbb", "exhaustive"])
def test_solve_examples(capsys, graph_file, family, params, z, algorithm):
    code, doc = run_json(capsys, schemas.SOLVE, "solve", graph_file(family, *params), "--algorithm", algorithm)
    assert code == 0 and doc["z"] == z and doc["algorithm"] == algorithm


def test_solve_cap_exit_three(capsys, graph_file):
    path = graph_file("peony", 3, 2, 2)
    assert run(capsys, "solve", path, "--algorithm", "exhaustive", "--cap", "10")[0] == 3
    assert run(capsys, "solve", path, "--algorithm", "exhaustive", "--cap", "16")[0] == 0


def test_solve_text_output(capsys, graph_file):
    code, out, _ = run(capsys, "solve", graph_file("web", 3, 1))
    assert code == 0 and "z          2" in out


# forts ----------------------------------------------------------------------------------

def test_forts_examples(capsys, graph_file):
    _, doc = run_json(capsys, schemas.FORTS, "forts", graph_file("path", 2), "--minimal")
    assert doc["minimal_forts"] == [[0, 1]] and doc["count"] == 1
    _, doc = run_json(capsys, schemas.FORTS, "forts", graph_file("cycle", 4), "--minimal")
    assert [0, 2] in doc["minimal_forts"] and [1, 3] in doc["minimal_forts"]


def test_forts_peony_type1(capsys, graph_file):
    p = PeonyParams(3, 2, 1)
    _, doc = run_json(capsys, schemas.FORTS, "forts", graph_file("peony", 3, 2, 1), "--max-size", "2", "--minimal")
    for i in range(1, 4):
        assert fort_type1(p, i, 1, 2).to_list() in doc["minimal_forts"]


def test_forts_all_and_cap(capsys, graph_file):
    _, doc = run_json(capsys, schemas.FORTS, "forts", graph_file("cycle", 4))
    assert doc["forts_count"] >= doc["count"]
    assert run(capsys, "forts", graph_file("path", 17))[0] == 3


# verify ---------------------------------------------------------------------------------

def test_verify_peony_example(capsys):
    code, doc = run_json(capsys, schemas.VERIFY, "verify", "peony", "--m", "3..4", "--r", "2..3", "--s", "1..2")
    assert code == 0 and doc["all_passed"] and doc["total"] == 8


def test_verify_core_seed(capsys):
    code, doc = run_json(capsys, schemas.VERIFY, "verify", "core", "--seed", "7")
    assert code == 0 and doc["seed"] == 7
    cases = {row["case"] for row in doc["rows"]}
    assert {"terminus", "restriction"} <= cases


def test_verify_web_example_text(capsys):
    code, out, _ = run(capsys, "verify", "web", "--m", "3..9", "--r", "1..3")
    assert code == 0
    assert "21/21 passed" in out
    assert all(regime in out for regime in ("web-small-m", "web-mid-m", "web-large-m"))


def test_verify_bad_range_exit_two(capsys):
    assert run(capsys, "verify", "web", "--m", "3..x")[0] == 2


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "x.txt", "--bogus"])
    assert exc.value.code == 2


def test_module_entry_point(graph_file):
    out = subprocess.run(
        [sys.executable, "-m", "forcelab", "solve", graph_file("cycle", 5), "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["z"] == 2
