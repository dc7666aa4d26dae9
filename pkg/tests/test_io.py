import pytest
from hypothesis import given
from hypothesis import strategies as st

from bqgraph import build_graph, emit_dot, emit_json_graph, parse_dot_subset, parse_json_graph, trivial_graph
from bqgraph.errors import DuplicateEdgeId, GraphSyntaxError, SchemaError
from bqgraph.fixtures import G8, circulant
from bqgraph.io import (
    dump_graph,
    emit_boundary,
    emit_chain,
    format_of,
    load_graph,
    parse_boundary,
    parse_chain,
    save_graph,
)

from conftest import multigraphs

TRIVIAL_JSON = b'{\n  "vertices": ["v"],\n  "edges": []\n}\n'


def test_trivial_document_layout():
    assert emit_json_graph(trivial_graph()) == TRIVIAL_JSON
    assert parse_json_graph(TRIVIAL_JSON) == trivial_graph()


def test_json_layout_with_edges():
    g = build_graph(["a", "b"], [("e1", "a", "b"), ("e2", "b", "b")])
    assert emit_json_graph(g).decode() == (
        '{\n  "vertices": ["a", "b"],\n  "edges": [\n'
        '    {"id": "e1", "src": "a", "dst": "b"},\n'
        '    {"id": "e2", "src": "b", "dst": "b"}\n  ]\n}\n'
    )


def test_json_syntax_error_has_position():
    with pytest.raises(GraphSyntaxError) as info:
        parse_json_graph('{\n  "vertices": [\n')
    assert info.value.line == 3
    assert str(info.value).startswith("3:")


@pytest.mark.parametrize("doc", [
    "[]",
    '{"vertices": ["a"]}',
    '{"vertices": "a", "edges": []}',
    '{"vertices": ["a"], "edges": [{"id": "e", "src": "a"}]}',
    '{"vertices": ["a"], "edges": [{"id": 3, "src": "a", "dst": "a"}]}',
    '{"vertices": ["a"], "edges": ["e"]}',
])
def test_json_schema_errors(doc):
    with pytest.raises(SchemaError):
        parse_json_graph(doc)


def test_dot_layout():
    text = emit_dot(circulant(2)).decode()
    assert text == 'digraph {\n  v1;\n  v2;\n  v1 -> v2 [id="e1"];\n  v2 -> v1 [id="e2"];\n}\n'


def test_dot_parse_auto_ids_and_first_mention_order():
    g = parse_dot_subset('digraph G { c -> a; b; a -> b [id="e1"]; a -> a; }')
    assert g.vertices == ("c", "a", "b")
    assert [(e.id, e.src, e.dst) for e in g.edges] == [("e2", "c", "a"), ("e1", "a", "b"), ("e3", "a", "a")]


def test_dot_quoted_names_round_trip():
    g = build_graph(["a-b", "x{y", "digraph", 'q"t'], [('i"d?', "a-b", "x{y"), ("->", "digraph", 'q"t')])
    assert parse_dot_subset(emit_dot(g)) == g


def test_dot_errors_carry_line_and_column():
    with pytest.raises(GraphSyntaxError) as info:
        parse_dot_subset("digraph {\n  a -> ;\n}")
    assert (info.value.line, info.value.col) == (2, 8)
    with pytest.raises(GraphSyntaxError):
        parse_dot_subset("graph { a; }")
    with pytest.raises(GraphSyntaxError):
        parse_dot_subset('digraph { a -> b [color="red"]; }')
    with pytest.raises(DuplicateEdgeId):
        parse_dot_subset('digraph { a -> b [id="x"]; b -> a [id="x"]; }')


def test_boundary_and_chain_documents():
    assert emit_boundary(["v7", "v8"]) == b'{"boundary": ["v7", "v8"]}\n'
    assert parse_boundary(emit_boundary(["v7", "v8"])) == ["v7", "v8"]
    assert parse_boundary('{"boundary": []}') == []
    doc = emit_chain([["a"], ["a", "b"]])
    assert doc == b'{"chain": [["a"], ["a", "b"]]}\n'
    assert parse_chain(doc) == [["a"], ["a", "b"]]
    with pytest.raises(SchemaError):
        parse_chain('{"chain": [1]}')


def test_files_by_extension(tmp_path):
    for ext in (".json", ".dot"):
        p = tmp_path / f"g{ext}"
        save_graph(str(p), G8)
        assert load_graph(str(p)) == G8
        assert p.read_bytes() == dump_graph(G8, ext)
    with pytest.raises(SchemaError):
        format_of("graph.txt")


@given(multigraphs())
def test_json_round_trip(g):
    text = emit_json_graph(g)
    assert parse_json_graph(text) == g
    assert emit_json_graph(parse_json_graph(text)) == text


@given(multigraphs())
def test_dot_round_trip(g):
    text = emit_dot(g)
    assert parse_dot_subset(text) == g
    assert emit_dot(parse_dot_subset(text)) == text


names = st.text(st.characters(blacklist_categories=("Cs", "Cc", "Zs", "Zl", "Zp"), blacklist_characters=","),
                min_size=1, max_size=6)


@given(st.lists(names, min_size=1, max_size=4, unique=True))
def test_unusual_names_round_trip(vs):
    g = build_graph(vs, [(f"id{i}", v, vs[0]) for i, v in enumerate(vs)])
    assert parse_json_graph(emit_json_graph(g)) == g
    assert parse_dot_subset(emit_dot(g)) == g
