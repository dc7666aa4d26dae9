import pytest
from hypothesis import given

from bqgraph import build_graph, induced_full_subgraph, size, trivial_graph
from bqgraph.errors import (
    DanglingEndpoint,
    DuplicateEdgeId,
    DuplicateVertex,
    InvalidName,
    UnknownVertex,
)
from bqgraph.fixtures import G8, TWO_CYCLE, circulant
from bqgraph.graph import (
    FullSubgraphSpec,
    has_directed_path,
    is_connected,
    is_simplicial,
    reachable_from,
    relabel,
    weak_components,
)

from conftest import graph_and_subset, multigraphs


@pytest.mark.parametrize("bad", ["", "a b", "a,b", "tab\there", "new\nline"])
def test_invalid_names_rejected(bad):
    with pytest.raises(InvalidName):
        build_graph([bad], [])
    with pytest.raises(InvalidName):
        build_graph(["a"], [(bad, "a", "a")])


def test_construction_errors():
    with pytest.raises(DuplicateVertex):
        build_graph(["a", "a"], [])
    with pytest.raises(DuplicateEdgeId):
        build_graph(["a", "b"], [("e", "a", "b"), ("e", "b", "a")])
    with pytest.raises(DanglingEndpoint):
        build_graph(["a"], [("e", "a", "z")])


def test_loops_and_parallel_edges_are_kept():
    g = build_graph(["a", "b"], [("x", "a", "b"), ("y", "a", "b"), ("z", "b", "b")])
    assert g.mult("a", "b") == 2
    assert g.loop_count("b") == 1
    assert g.signature("a") == (2, 0, 0)
    assert g.signature("b") == (1, 3, 1)
    assert g.successors("a") == ["b"]
    assert not is_simplicial(g)


def test_size_counts_vertices_and_edges():
    assert size(trivial_graph()) == 1
    assert size(circulant(4)) == 8
    assert size(G8) == 16


def test_induced_subgraph_keeps_internal_edges_in_order():
    sub = induced_full_subgraph(G8, {"v5", "v6", "v7", "v1"})
    assert sub.vertices == ("v1", "v5", "v6", "v7")
    assert [e.id for e in sub.edges] == ["e6", "e7"]
    assert induced_full_subgraph(G8, FullSubgraphSpec(["v6"])).n_edges == 0


def test_induced_subgraph_unknown_vertex():
    with pytest.raises(UnknownVertex):
        induced_full_subgraph(G8, {"v1", "nope"})


def test_paths_have_positive_length():
    c = circulant(3)
    assert has_directed_path(c, "v1", "v1")
    tree = build_graph(["a", "b"], [("e", "a", "b")])
    assert not has_directed_path(tree, "a", "a")
    assert has_directed_path(tree, "a", "b")
    assert not has_directed_path(tree, "b", "a")
    assert reachable_from(G8, "v6") == {"v7", "v8"}
    with pytest.raises(UnknownVertex):
        has_directed_path(tree, "a", "q")


def test_connectivity_is_weak():
    g = build_graph(["a", "b", "c"], [("e1", "a", "b"), ("e2", "c", "b")])
    assert is_connected(g)
    h = build_graph(["a", "b", "c"], [("e1", "a", "b")])
    assert not is_connected(h)
    assert weak_components(h) == [["a", "b"], ["c"]]
    assert is_connected(trivial_graph())
    assert is_simplicial(TWO_CYCLE)


def test_equality_is_order_sensitive():
    a = build_graph(["x", "y"], [("e", "x", "y")])
    b = build_graph(["y", "x"], [("e", "x", "y")])
    assert a != b
    assert a == build_graph(["x", "y"], [("e", "x", "y")])
    assert hash(a) == hash(build_graph(["x", "y"], [("e", "x", "y")]))


def test_relabel_renames_everything():
    g = relabel(circulant(3), {"v1": "a", "v2": "b", "v3": "c"}, {"e1": "f"})
    assert g.vertices == ("a", "b", "c")
    assert [e.id for e in g.edges] == ["f", "e2", "e3"]
    assert g.edge_index["f"].src == "a"


@given(multigraphs())
def test_degree_sums_match_edge_count(g):
    assert sum(g.out_degree(v) for v in g.vertices) == g.n_edges
    assert sum(g.in_degree(v) for v in g.vertices) == g.n_edges
    assert sum(g.multiplicity.values()) == g.n_edges


@given(graph_and_subset())
def test_induced_subgraph_matches_definition(case):
    g, vs = case
    sub = induced_full_subgraph(g, vs)
    assert set(sub.vertices) == vs
    assert {e.id for e in sub.edges} == {e.id for e in g.edges if e.src in vs and e.dst in vs}
    assert induced_full_subgraph(g, g.vertices) == g


@given(multigraphs())
def test_weak_components_partition_vertices(g):
    comps = weak_components(g)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == sorted(g.vertices)
    where = {v: i for i, c in enumerate(comps) for v in c}
    assert all(where[e.src] == where[e.dst] for e in g.edges)
