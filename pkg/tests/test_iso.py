from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bqgraph import are_isomorphic, build_graph, canonical_form, find_induced_embedding, trivial_graph
from bqgraph.errors import SizeLimit
from bqgraph.fixtures import G8, T2, T3, circulant, directed_path, loop_graph
from bqgraph.harness import brute_force_isomorphic
from bqgraph.iso import canonical_graph, canonical_labeling, is_induced_embedding, is_valid_mapping

from conftest import multigraphs, relabelled


def brute_force_embeds(g1, g2):
    """Try every injective vertex map and compare multiplicities."""
    for image in permutations(g2.vertices, g1.n_vertices):
        f = dict(zip(g1.vertices, image))
        if all(g1.mult(u, v) == g2.mult(f[u], f[v]) for u in g1.vertices for v in g1.vertices):
            return True
    return False


def test_basic_answers():
    assert are_isomorphic(T2, T3) is None
    assert are_isomorphic(circulant(4), circulant(4, "w")) is not None
    assert are_isomorphic(loop_graph(2), loop_graph(3)) is None
    assert are_isomorphic(trivial_graph("a"), trivial_graph("b")).vertex_map == {"a": "b"}


def test_mapping_covers_edges():
    m = are_isomorphic(circulant(3), circulant(3, "w"))
    assert is_valid_mapping(circulant(3), circulant(3, "w"), m)
    assert sorted(m.edge_map.values()) == ["e1", "e2", "e3"]


def test_parallel_edges_matter():
    a = build_graph(["x", "y"], [("1", "x", "y"), ("2", "x", "y")])
    b = build_graph(["x", "y"], [("1", "x", "y"), ("2", "y", "x")])
    assert are_isomorphic(a, b) is None
    assert canonical_form(a) != canonical_form(b)


def test_canonical_form_document():
    assert canonical_form(trivial_graph("zz")) == b'{\n  "vertices": ["0"],\n  "edges": []\n}\n'
    c = canonical_graph(circulant(3))
    assert c.vertices == ("0", "1", "2")
    assert [e.id for e in c.edges] == ["e0", "e1", "e2"]


def test_embedding_examples():
    m = find_induced_embedding(directed_path(2), G8)
    assert m is not None and is_induced_embedding(directed_path(2), G8, m)
    # a two-edge path does not sit inside C_3 as an induced subgraph
    assert find_induced_embedding(directed_path(3), circulant(3)) is None
    assert find_induced_embedding(circulant(3), circulant(4)) is None
    assert find_induced_embedding(loop_graph(1), circulant(3)) is None


def test_size_limits(monkeypatch):
    big = build_graph([f"x{i}" for i in range(13)], [])
    with pytest.raises(SizeLimit):
        are_isomorphic(big, big)
    assert are_isomorphic(big, big, force=True) is not None
    monkeypatch.setenv("GQ_SIZE_LIMIT", "20")
    assert are_isomorphic(big, big) is not None
    monkeypatch.setenv("GQ_SIZE_LIMIT", "3")
    with pytest.raises(SizeLimit):
        canonical_form(circulant(4))
    with pytest.raises(SizeLimit):
        find_induced_embedding(circulant(4), circulant(3))


@given(multigraphs(max_vertices=5, max_edges=8), multigraphs(max_vertices=5, max_edges=8))
def test_agrees_with_brute_force(g, h):
    fast = are_isomorphic(g, h)
    assert (fast is not None) == brute_force_isomorphic(g, h)
    if fast is not None:
        assert is_valid_mapping(g, h, fast)
    assert (canonical_form(g) == canonical_form(h)) == brute_force_isomorphic(g, h)


@given(relabelled(multigraphs(max_vertices=7, max_edges=12)))
def test_relabelled_copies(case):
    g, h, vmap = case
    m = are_isomorphic(g, h)
    assert m is not None and is_valid_mapping(g, h, m)
    assert canonical_form(g) == canonical_form(h)
    lab_g, lab_h = canonical_labeling(g), canonical_labeling(h)
    assert [g.signature(v) for v in lab_g] == [h.signature(v) for v in lab_h]


@given(multigraphs(max_vertices=4, max_edges=5), multigraphs(max_vertices=5, max_edges=9))
def test_embedding_agrees_with_brute_force(g1, g2):
    m = find_induced_embedding(g1, g2)
    assert (m is not None) == brute_force_embeds(g1, g2)
    if m is not None:
        assert is_induced_embedding(g1, g2, m)


@given(multigraphs(max_vertices=6, max_edges=10), st.data())
def test_induced_subgraphs_always_embed(g, data):
    from bqgraph import induced_full_subgraph
    vs = data.draw(st.sets(st.sampled_from(g.vertices), min_size=1))
    sub = induced_full_subgraph(g, vs)
    m = find_induced_embedding(sub, g)
    assert m is not None and is_induced_embedding(sub, g, m)
