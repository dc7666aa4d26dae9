"""Named example graphs: standard families and the worked examples."""

from __future__ import annotations

from .graph import DirectedMultigraph, build_graph


def circulant(n: int, prefix: str = "v") -> DirectedMultigraph:
    """The one-flow circulant C_n: v1 -> v2 -> ... -> vn -> v1."""
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    return build_graph(vs, [(f"e{i}", vs[i - 1], vs[i % n]) for i in range(1, n + 1)])


def loop_graph(m: int, vertex: str = "v") -> DirectedMultigraph:
    return build_graph([vertex], [(f"l{i}", vertex, vertex) for i in range(1, m + 1)])


def directed_path(n: int) -> DirectedMultigraph:
    vs = [f"v{i}" for i in range(1, n + 1)]
    return build_graph(vs, [(f"e{i}", vs[i - 1], vs[i]) for i in range(1, n)])


def single_edge(src: str = "v1", dst: str = "v2", eid: str = "e") -> DirectedMultigraph:
    return build_graph([src, dst], [(eid, src, dst)])


TWO_VERTEX = single_edge()

THREE_VERTEX = build_graph(["v1", "v2", "v3"], [("e1", "v1", "v2"), ("e2", "v1", "v3")])

G8 = build_graph(
    [f"v{i}" for i in range(1, 9)],
    [
        ("e1", "v1", "v2"),
        ("e2", "v2", "v3"),
        ("e3", "v3", "v5"),
        ("e4", "v5", "v4"),
        ("e5", "v4", "v1"),
        ("e6", "v5", "v6"),
        ("e7", "v6", "v7"),
        ("e8", "v6", "v8"),
    ],
)

# G8's two gluing components, written with their own names
G8_CYCLE = build_graph(
    ["v1", "v2", "v3", "v4", "v5"],
    [("e1", "v1", "v2"), ("e2", "v2", "v3"), ("e3", "v3", "v5"), ("e4", "v5", "v4"), ("e5", "v4", "v1")],
)
T4 = build_graph(["b1", "b2", "b3", "b4"], [("f1", "b1", "b2"), ("f2", "b2", "b3"), ("f3", "b2", "b4")])

T1 = build_graph(["v1", "v2", "v3"], [("e1", "v1", "v2"), ("e2", "v3", "v1")])
T2 = build_graph(["v1", "v2", "v3"], [("e1", "v1", "v2"), ("e2", "v1", "v3")])
T3 = build_graph(["v1", "v2", "v3"], [("e1", "v2", "v1"), ("e2", "v3", "v1")])

_C3_EDGES = [("e1", "v1", "v2"), ("e2", "v2", "v3"), ("e3", "v3", "v1")]

# C_3 glued at v3 to an out-star and to an in-star
MIXED_OUT = build_graph(["v1", "v2", "v3", "v4", "v5"], _C3_EDGES + [("e4", "v3", "v4"), ("e5", "v3", "v5")])
MIXED_IN = build_graph(["v1", "v2", "v3", "v4", "v5"], _C3_EDGES + [("e4", "v4", "v3"), ("e5", "v5", "v3")])

TWO_CYCLE = build_graph(["v1", "v2"], [("e1", "v1", "v2"), ("e2", "v2", "v1")])

TRIANGLE_DAG = build_graph(["v1", "v2", "v3"], [("e1", "v1", "v2"), ("e2", "v1", "v3"), ("e3", "v2", "v3")])
