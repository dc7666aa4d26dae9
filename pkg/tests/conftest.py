import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bqgraph import build_graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def multigraphs(draw, max_vertices=6, max_edges=10, min_vertices=1, loops=True):
    """Arbitrary directed multigraphs, loops and parallel edges included."""
    n = draw(st.integers(min_vertices, max_vertices))
    names = [f"v{i + 1}" for i in range(n)]
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    pairs = draw(st.lists(pair, max_size=max_edges if (loops or n > 1) else 0))
    order = draw(st.permutations(names))
    return build_graph(order, [(f"e{k + 1}", names[a], names[b]) for k, (a, b) in enumerate(pairs)])


@st.composite
def simplicial_connected(draw, max_vertices=6):
    n = draw(st.integers(1, max_vertices))
    names = [f"v{i + 1}" for i in range(n)]
    edges = set()
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        edges.add((i, j) if draw(st.booleans()) else (j, i))
    others = [(a, b) for a in range(n) for b in range(n) if a != b and (a, b) not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), max_size=n, unique=True)))
    edges = sorted(edges)
    return build_graph(names, [(f"e{k + 1}", names[a], names[b]) for k, (a, b) in enumerate(edges)])


@st.composite
def graph_and_subset(draw, graphs=None, nonempty=True):
    g = draw(graphs if graphs is not None else multigraphs())
    subset = draw(st.sets(st.sampled_from(g.vertices), min_size=1 if nonempty else 0))
    return g, frozenset(subset)


@st.composite
def relabelled(draw, graphs=None):
    """A graph, a renamed and reordered copy, and the vertex map between them."""
    g = draw(graphs if graphs is not None else multigraphs())
    new = draw(st.permutations([f"w{i}" for i in range(g.n_vertices)]))
    vmap = dict(zip(g.vertices, new))
    order = draw(st.permutations(new))
    edges = draw(st.permutations(list(g.edges)))
    h = build_graph(order, [(f"x{k}", vmap[e.src], vmap[e.dst]) for k, e in enumerate(edges)])
    return g, h, vmap


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
