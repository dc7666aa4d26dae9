"""Exact isomorphism, canonical forms and induced embeddings for small graphs.

Everything here is a backtracking search meant for desk-scale inputs.
Vertex limits default to 12 (10 for the pattern side of an embedding) and
can be overridden with the ``GQ_SIZE_LIMIT`` environment variable or
bypassed with ``force=True``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import SizeLimit
from .graph import DirectedMultigraph, build_graph
from .io import emit_json_graph

ISO_LIMIT = 12
PATTERN_LIMIT = 10


@dataclass(frozen=True)
class GraphMapping:
    vertex_map: Mapping[str, str]
    edge_map: Mapping[str, str]


def _limit(default: int) -> int:
    raw = os.environ.get("GQ_SIZE_LIMIT")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise SizeLimit(f"GQ_SIZE_LIMIT must be an integer, got {raw!r}") from None
    return default


def _check(g: DirectedMultigraph, default: int, force: bool, what: str = "graph"):
    if force:
        return
    lim = _limit(default)
    if g.n_vertices > lim:
        raise SizeLimit(f"{what} has {g.n_vertices} vertices; limit is {lim} (set GQ_SIZE_LIMIT or force)")


def _matrix(g: DirectedMultigraph):
    idx = g.vertex_index
    n = g.n_vertices
    m = [[0] * n for _ in range(n)]
    for e in g.edges:
        m[idx[e.src]][idx[e.dst]] += 1
    return m


# -- colour refinement ---------------------------------------------------------

def _recolor(keys):
    ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [ranks[k] for k in keys]


def _refine(m, colors):
    """Refine to the coarsest equitable partition below ``colors``.

    Colours are ranks of sorted signatures, so the result depends only on
    structure, never on vertex indices.
    """
    n = len(m)
    count = len(set(colors))
    while True:
        keys = []
        for v in range(n):
            out = sorted((colors[w], m[v][w]) for w in range(n) if m[v][w])
            inc = sorted((colors[w], m[w][v]) for w in range(n) if m[w][v])
            keys.append((colors[v], tuple(out), tuple(inc)))
        colors = _recolor(keys)
        new_count = len(set(colors))
        if new_count == count:
            return colors
        count = new_count


def _initial_colors(m):
    n = len(m)
    return _recolor([(sum(m[v]), sum(m[w][v] for w in range(n)), m[v][v]) for v in range(n)])


def _twins(m, u, v):
    # the transposition (u v) is an automorphism
    if m[u][u] != m[v][v] or m[u][v] != m[v][u]:
        return False
    for w in range(len(m)):
        if w != u and w != v and (m[u][w] != m[v][w] or m[w][u] != m[w][v]):
            return False
    return True


def _canonical_search(m):
    n = len(m)
    best = [None, None]

    def visit(colors):
        colors = _refine(m, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            cert = tuple(m[a][b] for a in order for b in order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        tried: list[int] = []
        for v in target:
            if any(_twins(m, t, v) for t in tried):
                continue
            tried.append(v)
            visit(_recolor([(colors[w], 0 if w == v else 1) for w in range(n)]))

    visit(_initial_colors(m) if n else [])
    return best[0] or (), best[1] or []


def canonical_labeling(g: DirectedMultigraph, force: bool = False) -> list[str]:
    """Vertex names in canonical order: isomorphic graphs listed this way coincide."""
    _check(g, ISO_LIMIT, force)
    _, order = _canonical_search(_matrix(g))
    return [g.vertices[i] for i in order]


def canonical_graph(g: DirectedMultigraph, force: bool = False) -> DirectedMultigraph:
    _check(g, ISO_LIMIT, force)
    m = _matrix(g)
    _, order = _canonical_search(m)
    n = len(order)
    edges = []
    for i in range(n):
        for j in range(n):
            for _ in range(m[order[i]][order[j]]):
                edges.append((f"e{len(edges)}", str(i), str(j)))
    return build_graph([str(i) for i in range(n)], edges)


def canonical_form(g: DirectedMultigraph, force: bool = False) -> bytes:
    """A byte string equal for two graphs exactly when they are isomorphic."""
    return emit_json_graph(canonical_graph(g, force=force))


# -- isomorphism ---------------------------------------------------------------

def _edge_map(g1, g2, vmap):
    buckets: dict[tuple[str, str], list[str]] = {}
    for e in g2.edges:
        buckets.setdefault((e.src, e.dst), []).append(e.id)
    used: dict[tuple[str, str], int] = {}
    emap = {}
    for e in g1.edges:
        key = (vmap[e.src], vmap[e.dst])
        k = used.get(key, 0)
        emap[e.id] = buckets[key][k]
        used[key] = k + 1
    return emap


def are_isomorphic(g1: DirectedMultigraph, g2: DirectedMultigraph, force: bool = False) -> Optional[GraphMapping]:
    """Return an isomorphism g1 -> g2, or None.

    Edge multiplicities per ordered vertex pair must agree; edge ids are
    never compared. The mapping returned is the first one found when g1's
    vertices are taken in (out-degree, in-degree, loops, name) order and
    candidates in g2 in the same order.
    """
    _check(g1, ISO_LIMIT, force, "first graph")
    _check(g2, ISO_LIMIT, force, "second graph")
    if g1.n_vertices != g2.n_vertices or g1.n_edges != g2.n_edges:
        return None
    if sorted(map(g1.signature, g1.vertices)) != sorted(map(g2.signature, g2.vertices)):
        return None
    m1, m2 = _matrix(g1), _matrix(g2)
    c1 = _refine(m1, _initial_colors(m1)) if m1 else []
    c2 = _refine(m2, _initial_colors(m2)) if m2 else []
    if sorted(c1) != sorted(c2):
        return None
    n = len(m1)
    key1 = lambda i: (g1.signature(g1.vertices[i]), g1.vertices[i])
    key2 = lambda i: (g2.signature(g2.vertices[i]), g2.vertices[i])
    order = sorted(range(n), key=key1)
    cands = {c: sorted((j for j in range(n) if c2[j] == c), key=key2) for c in set(c2)}
    assign = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        a = order[k]
        for b in cands[c1[a]]:
            if used[b] or m1[a][a] != m2[b][b]:
                continue
            if any(m1[a][x] != m2[b][assign[x]] or m1[x][a] != m2[assign[x]][b] for x in order[:k]):
                continue
            assign[a], used[b] = b, True
            if extend(k + 1):
                return True
            assign[a], used[b] = -1, False
        return False

    if not extend(0):
        return None
    vmap = {g1.vertices[i]: g2.vertices[assign[i]] for i in range(n)}
    return GraphMapping(vmap, _edge_map(g1, g2, vmap))


# -- induced embedding ------------------------------------------------------------

def _embedding_order(g, m):
    n = len(m)
    rest = set(range(n))
    order = []
    while rest:
        def score(v):
            links = sum(1 for u in order if m[u][v] or m[v][u])
            return (-links, -(sum(m[v]) + sum(m[w][v] for w in range(n))), g.vertices[v])
        v = min(rest, key=score)
        order.append(v)
        rest.remove(v)
    return order


def find_induced_embedding(g1: DirectedMultigraph, g2: DirectedMultigraph, force: bool = False) -> Optional[GraphMapping]:
    """Injective map of g1 into g2 whose image induces a copy of g1.

    For every ordered pair (u, v) of g1 vertices, including u == v, the
    number of u->v edges equals the number of f(u)->f(v) edges in g2.
    """
    _check(g1, PATTERN_LIMIT, force, "pattern graph")
    _check(g2, ISO_LIMIT, force, "host graph")
    n1, n2 = g1.n_vertices, g2.n_vertices
    if n1 > n2 or g1.n_edges > g2.n_edges:
        return None
    m1, m2 = _matrix(g1), _matrix(g2)
    out2 = [sum(r) for r in m2]
    in2 = [sum(m2[w][v] for w in range(n2)) for v in range(n2)]
    out1 = [sum(r) for r in m1]
    in1 = [sum(m1[w][v] for w in range(n1)) for v in range(n1)]
    order = _embedding_order(g1, m1)
    assign = [-1] * n1
    used = [False] * n2

    def extend(k):
        if k == n1:
            return True
        a = order[k]
        for b in range(n2):
            if used[b] or m1[a][a] != m2[b][b] or out2[b] < out1[a] or in2[b] < in1[a]:
                continue
            if any(m1[a][x] != m2[b][assign[x]] or m1[x][a] != m2[assign[x]][b] for x in order[:k]):
                continue
            assign[a], used[b] = b, True
            if extend(k + 1):
                return True
            assign[a], used[b] = -1, False
        return False

    if not extend(0):
        return None
    vmap = {g1.vertices[i]: g2.vertices[assign[i]] for i in range(n1)}
    return GraphMapping(vmap, _edge_map(g1, g2, vmap))


def is_valid_mapping(g1: DirectedMultigraph, g2: DirectedMultigraph, mapping: GraphMapping) -> bool:
    """Check the incidence and injectivity conditions of a mapping."""
    vm, em = mapping.vertex_map, mapping.edge_map
    if set(vm) != set(g1.vertices) or len(set(vm.values())) != len(vm):
        return False
    if set(em) != {e.id for e in g1.edges} or len(set(em.values())) != len(em):
        return False
    for e in g1.edges:
        f = g2.edge_index.get(em[e.id])
        if f is None or f.src != vm[e.src] or f.dst != vm[e.dst]:
            return False
    return True


def is_induced_embedding(g1, g2, mapping: GraphMapping) -> bool:
    if not is_valid_mapping(g1, g2, mapping):
        return False
    vm = mapping.vertex_map
    return all(g1.mult(u, v) == g2.mult(vm[u], vm[v]) for u in g1.vertices for v in g1.vertices)
