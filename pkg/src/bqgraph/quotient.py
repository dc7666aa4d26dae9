"""Boundary quotients, subgraph boundary quotients and vertex-fixed gluing."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .errors import EmptySubgraph, NameCollision, UnknownVertex
from .graph import DirectedMultigraph, as_vertex_set, build_graph, induced_full_subgraph

BASE_POINT = "b"


@dataclass(frozen=True)
class QuotientResult:
    graph: DirectedMultigraph
    base_point: Optional[str]
    vertex_map: Mapping[str, str]
    edge_map: Mapping[str, str]

    def loop_edges(self) -> list[str]:
        """Source edge ids that became loops at the base point."""
        if self.base_point is None:
            return []
        g = self.graph
        return [src_id for src_id, q_id in self.edge_map.items()
                if g.edge_index[q_id].src == self.base_point == g.edge_index[q_id].dst]


@dataclass(frozen=True)
class GlueSpec:
    left: str
    right: str
    glued_name: Optional[str] = None


def fresh_base_name(taken: Iterable[str], stem: str = BASE_POINT) -> str:
    taken = set(taken)
    name = stem
    while name in taken:
        name += "_"
    return name


def _collapse(g: DirectedMultigraph, boundary: frozenset, drop_edges: frozenset = frozenset()) -> QuotientResult:
    kept = [v for v in g.vertices if v not in boundary]
    base = fresh_base_name(kept)
    vmap = {v: (base if v in boundary else v) for v in g.vertices}
    edges = [(e.id, vmap[e.src], vmap[e.dst]) for e in g.edges if e.id not in drop_edges]
    q = build_graph([base] + kept, edges)
    return QuotientResult(q, base, vmap, {eid: eid for eid, _, _ in edges})


def _identity(g: DirectedMultigraph) -> QuotientResult:
    return QuotientResult(g, None, {v: v for v in g.vertices}, {e.id: e.id for e in g.edges})


def boundary_quotient(g: DirectedMultigraph, boundary) -> QuotientResult:
    """Identify every boundary vertex with a single base point.

    Edges keep their ids; an endpoint inside the boundary is rewritten to
    the base point, so an edge with both ends in the boundary becomes a
    loop there. The empty boundary returns ``g`` with no base point.
    """
    bset = as_vertex_set(boundary)
    for v in bset:
        g.require_vertex(v)
    if not bset:
        return _identity(g)
    return _collapse(g, bset)


def total_quotient(g: DirectedMultigraph) -> QuotientResult:
    return boundary_quotient(g, g.vertices)


def subgraph_boundary_quotient(g: DirectedMultigraph, h) -> QuotientResult:
    """Collapse the full subgraph induced on ``h`` (its vertices and edges) to a point."""
    hset = as_vertex_set(h)
    if not hset:
        raise EmptySubgraph("a full subgraph needs at least one vertex")
    sub = induced_full_subgraph(g, hset)
    return _collapse(g, hset, frozenset(e.id for e in sub.edges))


def _rename_suffix(name, taken, suffix="#2"):
    while name in taken:
        name += suffix
    return name


def glue(g1: DirectedMultigraph, g2: DirectedMultigraph, spec: GlueSpec, strict: bool = False) -> DirectedMultigraph:
    """Identify ``spec.left`` of g1 with ``spec.right`` of g2.

    Vertex names and edge ids of g2 that clash with g1 get ``#2`` appended
    (repeatedly if needed); with ``strict`` a clash raises NameCollision.
    The glued vertex is named ``spec.glued_name`` or, by default, ``spec.left``.
    """
    g1.require_vertex(spec.left)
    if spec.right not in g2:
        raise UnknownVertex(f"unknown vertex {spec.right!r} in right graph")
    glued = spec.glued_name or spec.left
    rest1 = [v for v in g1.vertices if v != spec.left]
    if glued in rest1:
        raise NameCollision(f"glued name {glued!r} clashes with a vertex of the left graph")

    taken_v = set(rest1) | {glued}
    vmap2 = {spec.right: glued}
    for v in g2.vertices:
        if v == spec.right:
            continue
        if v in taken_v:
            if strict:
                raise NameCollision(f"vertex {v!r} occurs in both graphs")
            new = _rename_suffix(v, taken_v | set(g2.vertices))
        else:
            new = v
        vmap2[v] = new
        taken_v.add(new)

    taken_e = {e.id for e in g1.edges}
    emap2 = {}
    for e in g2.edges:
        if e.id in taken_e:
            if strict:
                raise NameCollision(f"edge id {e.id!r} occurs in both graphs")
            new = _rename_suffix(e.id, taken_e | {x.id for x in g2.edges})
        else:
            new = e.id
        emap2[e.id] = new
        taken_e.add(new)

    vmap1 = {v: (glued if v == spec.left else v) for v in g1.vertices}
    vertices = [vmap1[v] for v in g1.vertices] + [vmap2[v] for v in g2.vertices if v != spec.right]
    edges = [(e.id, vmap1[e.src], vmap1[e.dst]) for e in g1.edges]
    edges += [(emap2[e.id], vmap2[e.src], vmap2[e.dst]) for e in g2.edges]
    return build_graph(vertices, edges)


def iterated_glue(initial: DirectedMultigraph, steps, strict: bool = False) -> DirectedMultigraph:
    """Right-associative fold ``G1 # (G2 # (... # (Gn # initial)))``.

    ``steps`` is a list of ``(graph, GlueSpec)``; the innermost step comes
    last. In each spec ``left`` names a vertex of that step's graph and
    ``right`` a vertex of the accumulated graph.
    """
    acc = initial
    for graph, spec in reversed(list(steps)):
        acc = glue(graph, acc, spec, strict=strict)
    return acc
