"""Immutable directed multigraphs with named vertices and named edges.

Loops and parallel edges are allowed. Vertex and edge order is the order
of construction and is preserved by every operation in the package.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    DanglingEndpoint,
    DuplicateEdgeId,
    DuplicateVertex,
    InvalidName,
    UnknownVertex,
)

_BAD_TOKEN = re.compile(r"[\s,]")


def check_token(name: str, what: str = "name") -> str:
    if not isinstance(name, str) or not name or _BAD_TOKEN.search(name):
        raise InvalidName(f"invalid {what} {name!r}: must be a nonempty token without whitespace or commas")
    return name


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str

    @property
    def is_loop(self) -> bool:
        return self.src == self.dst


@dataclass(frozen=True, eq=False)
class DirectedMultigraph:
    """A finite directed multigraph.

    Build instances through :func:`build_graph` (validating) rather than
    the constructor. Equality compares vertex order and edge order too,
    which is what the serialization round-trip laws need; use
    :func:`bqgraph.iso.are_isomorphic` for structural equality.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __eq__(self, other):
        if not isinstance(other, DirectedMultigraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __contains__(self, v):
        return v in self.vertex_index

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[Edge, ...]]:
        inc = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.dst].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def multiplicity(self) -> dict[tuple[str, str], int]:
        """Number of edges per ordered (src, dst) pair; absent pairs are 0."""
        m: dict[tuple[str, str], int] = {}
        for e in self.edges:
            m[(e.src, e.dst)] = m.get((e.src, e.dst), 0) + 1
        return m

    def mult(self, u: str, v: str) -> int:
        return self.multiplicity.get((u, v), 0)

    def out_degree(self, v: str) -> int:
        return len(self.out_edges[v])

    def in_degree(self, v: str) -> int:
        return len(self.in_edges[v])

    def loop_count(self, v: str) -> int:
        return self.mult(v, v)

    def signature(self, v: str) -> tuple[int, int, int]:
        return (self.out_degree(v), self.in_degree(v), self.loop_count(v))

    def successors(self, v: str) -> list[str]:
        seen = {}
        for e in self.out_edges[v]:
            seen.setdefault(e.dst, None)
        return list(seen)

    def require_vertex(self, v: str) -> str:
        if v not in self.vertex_index:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return v

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def __repr__(self):
        es = ", ".join(f"{e.id}:{e.src}->{e.dst}" for e in self.edges)
        return f"DirectedMultigraph(V=[{', '.join(self.vertices)}], E=[{es}])"


@dataclass(frozen=True)
class FullSubgraphSpec:
    """A vertex set whose induced subgraph is taken in some host graph."""

    vertex_set: frozenset

    def __init__(self, vertices: Iterable[str]):
        object.__setattr__(self, "vertex_set", frozenset(vertices))

    def __len__(self):
        return len(self.vertex_set)

    def __iter__(self):
        return iter(sorted(self.vertex_set))


def as_vertex_set(spec) -> frozenset:
    if isinstance(spec, FullSubgraphSpec):
        return spec.vertex_set
    if isinstance(spec, str):
        return frozenset([spec])
    return frozenset(spec)


def build_graph(vertex_names: Iterable[str], edges: Iterable) -> DirectedMultigraph:
    """Validate and build a graph.

    ``edges`` holds ``(id, src, dst)`` triples or :class:`Edge` objects.
    """
    vertices = []
    seen = set()
    for v in vertex_names:
        check_token(v, "vertex name")
        if v in seen:
            raise DuplicateVertex(f"duplicate vertex {v!r}")
        seen.add(v)
        vertices.append(v)
    built = []
    ids = set()
    for item in edges:
        eid, src, dst = (item.id, item.src, item.dst) if isinstance(item, Edge) else item
        check_token(eid, "edge id")
        if eid in ids:
            raise DuplicateEdgeId(f"duplicate edge id {eid!r}")
        ids.add(eid)
        for end in (src, dst):
            if end not in seen:
                raise DanglingEndpoint(f"edge {eid!r} references missing vertex {end!r}")
        built.append(Edge(eid, src, dst))
    return DirectedMultigraph(tuple(vertices), tuple(built))


def trivial_graph(name: str = "v") -> DirectedMultigraph:
    return build_graph([name], [])


def size(g: DirectedMultigraph) -> int:
    """|V(G)| + |E(G)|."""
    return len(g.vertices) + len(g.edges)


def induced_full_subgraph(g: DirectedMultigraph, spec) -> DirectedMultigraph:
    vs = as_vertex_set(spec)
    for v in vs:
        g.require_vertex(v)
    vertices = tuple(v for v in g.vertices if v in vs)
    edges = tuple(e for e in g.edges if e.src in vs and e.dst in vs)
    return DirectedMultigraph(vertices, edges)


def has_directed_path(g: DirectedMultigraph, u: str, v: str) -> bool:
    """True iff a directed path of length >= 1 leads from u to v."""
    g.require_vertex(u)
    g.require_vertex(v)
    return v in reachable_from(g, u)


def reachable_from(g: DirectedMultigraph, u: str) -> set[str]:
    # vertices reachable by paths of length >= 1; u itself only through a cycle
    seen: set[str] = set()
    queue = deque(g.successors(u))
    while queue:
        w = queue.popleft()
        if w in seen:
            continue
        seen.add(w)
        queue.extend(x for x in g.successors(w) if x not in seen)
    return seen


def weak_components(g: DirectedMultigraph) -> list[list[str]]:
    """Classes of vertices connected when edge direction is ignored.

    Classes come in order of their first vertex; members keep graph order.
    """
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        a, b = find(e.src), find(e.dst)
        if a != b:
            parent[b] = a
    classes: dict[str, list[str]] = {}
    for v in g.vertices:
        classes.setdefault(find(v), []).append(v)
    return list(classes.values())


def is_simplicial(g: DirectedMultigraph) -> bool:
    pairs = set()
    for e in g.edges:
        if e.is_loop or (e.src, e.dst) in pairs:
            return False
        pairs.add((e.src, e.dst))
    return True


def is_connected(g: DirectedMultigraph) -> bool:
    return len(g.vertices) >= 1 and len(weak_components(g)) == 1


def relabel(g: DirectedMultigraph, vertex_map: Mapping[str, str], edge_map: Mapping[str, str] | None = None,
            order: Iterable[str] | None = None) -> DirectedMultigraph:
    """Rename vertices (and optionally edges) through the given maps.

    ``order`` optionally gives the new vertex order (as new names).
    """
    edge_map = edge_map or {}
    vertices = list(order) if order is not None else [vertex_map[v] for v in g.vertices]
    edges = [(edge_map.get(e.id, e.id), vertex_map[e.src], vertex_map[e.dst]) for e in g.edges]
    return build_graph(vertices, edges)
