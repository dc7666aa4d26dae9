import json

import pytest

from bqgraph import LoopGraph, classify_type
from bqgraph.cli import main
from bqgraph.fixtures import G8, T2, T3, TRIANGLE_DAG, circulant
from bqgraph.io import emit_dot, emit_json_graph, load_graph, parse_json_graph


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in {"c3": circulant(3), "c4": circulant(4), "t2": T2, "t3": T3, "g8": G8,
                    "dag": TRIANGLE_DAG}.items():
        p = tmp_path / f"{name}.json"
        p.write_bytes(emit_json_graph(g))
        paths[name] = str(p)
    dot = tmp_path / "c4.dot"
    dot.write_bytes(emit_dot(circulant(4)))
    paths["c4dot"] = str(dot)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_total_quotient_prints_loop_graph(files, capsys):
    code, out, _ = run(capsys, "quotient", "--graph", files["c3"], "--total")
    assert code == 0
    assert classify_type(parse_json_graph(out)) == LoopGraph(3)


def test_quotient_modes_are_exclusive_and_required(files, capsys):
    assert run(capsys, "quotient", "--graph", files["c3"])[0] == 2
    assert run(capsys, "quotient", "--graph", files["c3"], "--total", "--boundary", "v1")[0] == 2
    code, out, _ = run(capsys, "quotient", "--graph", files["c3"], "--boundary", "")
    assert code == 0 and parse_json_graph(out) == circulant(3)


def test_quotient_output_file_and_dot(files, capsys, tmp_path):
    target = tmp_path / "q.dot"
    assert run(capsys, "quotient", "--graph", files["c4dot"], "--boundary", "v1,v2", "-o", str(target))[0] == 0
    q = load_graph(str(target))
    assert q.n_vertices == 3 and q.n_edges == 4
    code, out, _ = run(capsys, "quotient", "--graph", files["c4"], "--boundary", "v1,v2", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_subquotient_and_glue(files, capsys):
    code, out, _ = run(capsys, "subquotient", "--graph", files["c4"], "--subgraph", "v3,v4")
    assert code == 0 and parse_json_graph(out).n_edges == 3
    code, out, _ = run(capsys, "glue", "--left", files["c3"], "--right", files["c4"], "--at", "v1=v1",
                       "--name", "hub")
    g = parse_json_graph(out)
    assert code == 0 and g.n_vertices == 6 and "hub" in g.vertices
    assert run(capsys, "glue", "--left", files["c3"], "--right", files["c4"], "--at", "v1=v1", "--strict")[0] == 2
    assert run(capsys, "glue", "--left", files["c3"], "--right", files["c4"], "--at", "v1")[0] == 2


def test_index_output(files, capsys):
    code, out, _ = run(capsys, "index", "--graph", files["c4"], "--subgraph", "v3,v4")
    assert code == 0 and out == "e^5 (log=5)\n"
    code, out, _ = run(capsys, "index-between", "--g1", files["c3"], "--g2", files["c4"])
    assert code == 1 and out == "0\n"
    assert run(capsys, "index", "--graph", files["c4"], "--subgraph", "zz")[0] == 2


def test_iso(files, capsys):
    code, out, _ = run(capsys, "iso", files["t2"], files["t3"])
    assert code == 1 and out == "not isomorphic\n"
    code, out, _ = run(capsys, "iso", files["c4"], files["c4dot"])
    assert code == 0 and set(json.loads(out)["vertex_map"]) == {"v1", "v2", "v3", "v4"}


def test_decompose_and_admissible(files, capsys):
    code, out, _ = run(capsys, "decompose", "--graph", files["g8"])
    doc = json.loads(out)
    assert code == 0 and doc["type"] == "(C5, T)" and doc["cut_vertices"] == ["v5"]
    code, _, err = run(capsys, "decompose", "--graph", files["dag"])
    assert code == 1 and "not CT-decomposable" in err
    code, out, _ = run(capsys, "admissible", "--graph", files["g8"])
    assert code == 0 and out == "v7,v8\n"


def test_admissible_quotient_file(files, capsys, tmp_path):
    target = tmp_path / "aq.json"
    assert run(capsys, "admissible", "--graph", files["t2"], "--quotient", str(target))[0] == 0
    assert load_graph(str(target)).n_vertices == 2


def test_parse_errors_report_position(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "vertices": ["a"],\n  "edges": [oops]\n}\n')
    code, _, err = run(capsys, "decompose", "--graph", str(bad))
    assert code == 2
    assert f"{bad}:3:" in err


def test_missing_file_and_unknown_extension(tmp_path, capsys):
    assert run(capsys, "decompose", "--graph", str(tmp_path / "none.json"))[0] == 2
    odd = tmp_path / "g.txt"
    odd.write_text("{}")
    assert run(capsys, "decompose", "--graph", str(odd))[0] == 2


def test_chain(files, capsys, tmp_path):
    chain = tmp_path / "chain.json"
    chain.write_text(json.dumps({"chain": [["v3"], ["v3", "v4"]]}))
    code, out, _ = run(capsys, "chain", "--graph", files["c4"], "--chain", str(chain))
    assert code == 0 and json.loads(out)["chain"]["passed"]
    # the dual step G/{v3,v4} into G/{v3} has no embedding, so the run reports failure
    code, out, _ = run(capsys, "chain", "--graph", files["c4"], "--chain", str(chain), "--dual")
    assert code == 1
    (step,) = json.loads(out)["dual"]
    assert not step["embedded"] and step["duality_holds"]


def test_outputs_are_byte_deterministic(files, capsys):
    first = run(capsys, "decompose", "--graph", files["g8"])
    second = run(capsys, "decompose", "--graph", files["g8"])
    assert first == second


def test_verify_report(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--seed", "1", "--trials", "3", "--max-vertices", "4"]
    code_a = main(argv + ["--report", str(a)])
    code_b = main(argv + ["--report", str(b)])
    _, err = capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    assert code_a == code_b == (1 if report["failure_count"] else 0)
    failing = {c["id"] for c in report["claims"] if c["failures"]}
    assert failing <= {"c06a-dual-chain-embedding"}
    assert run(capsys, "verify", "--trials", "0")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
