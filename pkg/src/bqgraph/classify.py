"""Type recognition and maximal CT-decomposition.

A connected simplicial digraph is cut into the biconnected blocks of its
underlying undirected multigraph. Blocks that are coherently directed
cycles become circulant components, bridges are merged into maximal
weakly-connected trees, and anything else makes the graph
non-decomposable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotConnected, NotCTDecomposable, NotSimplicial
from .graph import (
    DirectedMultigraph,
    FullSubgraphSpec,
    induced_full_subgraph,
    is_connected,
    is_simplicial,
    reachable_from,
    weak_components,
)
from .quotient import GlueSpec, glue


@dataclass(frozen=True, order=True)
class TypeTag:
    kind: str  # "C", "L", "T", "1" or "?"
    n: Optional[int] = None

    def __str__(self):
        if self.kind in ("C", "L"):
            return f"{self.kind}{self.n}"
        return self.kind

    @property
    def is_circulant(self):
        return self.kind == "C"

    @property
    def is_tree(self):
        return self.kind == "T"


TRIVIAL = TypeTag("1")
TREE = TypeTag("T")
UNCLASSIFIED = TypeTag("?")


def Circulant(n: int) -> TypeTag:
    return TypeTag("C", n)


def LoopGraph(m: int) -> TypeTag:
    return TypeTag("L", m)


def format_type(tags) -> str:
    return "(" + ", ".join(map(str, tags)) + ")"


def _is_coherent_cycle(g: DirectedMultigraph) -> bool:
    n = g.n_vertices
    if n < 2 or g.n_edges != n:
        return False
    if any(e.is_loop for e in g.edges):
        return False
    if any(g.out_degree(v) != 1 or g.in_degree(v) != 1 for v in g.vertices):
        return False
    start = g.vertices[0]
    v, steps = start, 0
    while True:
        v = g.out_edges[v][0].dst
        steps += 1
        if v == start:
            return steps == n
        if steps > n:
            return False


def classify_type(g: DirectedMultigraph) -> TypeTag:
    n, m = g.n_vertices, g.n_edges
    if n == 1:
        return TRIVIAL if m == 0 else LoopGraph(m)
    if _is_coherent_cycle(g):
        return Circulant(n)
    if n >= 2 and m == n - 1 and not any(e.is_loop for e in g.edges) and len(weak_components(g)) == 1:
        return TREE
    return UNCLASSIFIED


def is_growing_tree(g: DirectedMultigraph) -> bool:
    if classify_type(g) not in (TREE, TRIVIAL):
        return False
    others = g.n_vertices - 1
    return any(len(reachable_from(g, v) - {v}) == others for v in g.vertices)


def growing_tree_root(g: DirectedMultigraph) -> Optional[str]:
    if classify_type(g) not in (TREE, TRIVIAL):
        return None
    others = g.n_vertices - 1
    return next((v for v in g.vertices if len(reachable_from(g, v) - {v}) == others), None)


# -- blocks --------------------------------------------------------------------

def biconnected_blocks(g: DirectedMultigraph) -> list[list[str]]:
    """Edge-id sets of the biconnected blocks of the underlying multigraph.

    Parallel and antiparallel edges are distinct (a 2-cycle is one block);
    loops are ignored. Blocks are listed in DFS completion order.
    """
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in g.vertices}
    for e in g.edges:
        if e.is_loop:
            continue
        adj[e.src].append((e.dst, e.id))
        adj[e.dst].append((e.src, e.id))
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    blocks = []
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = len(disc)
        estack: list[str] = []
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            for w, eid in it:
                if eid == via:
                    continue
                if w not in disc:
                    disc[w] = low[w] = len(disc)
                    estack.append(eid)
                    stack.append((w, eid, iter(adj[w])))
                    break
                if disc[w] < disc[v]:
                    estack.append(eid)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        block = []
                        while True:
                            x = estack.pop()
                            block.append(x)
                            if x == via:
                                break
                        blocks.append(block)
    return blocks


@dataclass(frozen=True)
class Component:
    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    tag: TypeTag

    @property
    def spec(self) -> FullSubgraphSpec:
        return FullSubgraphSpec(self.vertices)


@dataclass(frozen=True)
class Decomposition:
    components: tuple[Component, ...]
    cut_vertices: frozenset
    maximal_type: tuple[TypeTag, ...]

    def __str__(self):
        return format_type(self.maximal_type)


def _component_key(c: Component):
    rank = {"C": 0, "T": 1, "1": 2}[c.tag.kind]
    return (rank, -(c.tag.n or 0), tuple(sorted(c.vertices)))


def ct_decompose(g: DirectedMultigraph) -> Decomposition:
    """Maximal CT-decomposition of a connected simplicial digraph."""
    if not is_simplicial(g):
        raise NotSimplicial("decomposition needs a simplicial graph (no loops, no parallel edges)")
    if not is_connected(g):
        raise NotConnected("decomposition needs a weakly connected graph")
    if g.n_vertices == 1:
        c = Component(g.vertices, (), TRIVIAL)
        return Decomposition((c,), frozenset(), (TRIVIAL,))

    order = g.vertex_index
    comps = []
    bridges = []
    for block in biconnected_blocks(g):
        if len(block) == 1:
            bridges.append(g.edge_index[block[0]])
            continue
        vs = {x for eid in block for x in (g.edge_index[eid].src, g.edge_index[eid].dst)}
        sub = induced_full_subgraph(g, vs)
        if not _is_coherent_cycle(sub):
            raise NotCTDecomposable(sub.vertices, sorted(block, key=lambda i: g.edges.index(g.edge_index[i])))
        comps.append(Component(sub.vertices, tuple(e.id for e in sub.edges), Circulant(len(vs))))

    parent: dict[str, str] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in bridges:
        parent[find(e.dst)] = find(e.src)
    groups: dict[str, list] = {}
    for e in bridges:
        groups.setdefault(find(e.src), []).append(e)
    for es in groups.values():
        vs = {x for e in es for x in (e.src, e.dst)}
        ids = {e.id for e in es}
        comps.append(Component(tuple(sorted(vs, key=order.__getitem__)),
                               tuple(e.id for e in g.edges if e.id in ids), TREE))

    comps.sort(key=_component_key)
    seen: dict[str, int] = {}
    for c in comps:
        for v in c.vertices:
            seen[v] = seen.get(v, 0) + 1
    cuts = frozenset(v for v, k in seen.items() if k > 1)
    return Decomposition(tuple(comps), cuts, tuple(c.tag for c in comps))


def maximal_type(g: DirectedMultigraph) -> tuple[TypeTag, ...]:
    return ct_decompose(g).maximal_type


def is_mixed_maximal_type(g: DirectedMultigraph) -> bool:
    tags = ct_decompose(g).maximal_type
    return any(t.is_circulant for t in tags) and any(t.is_tree for t in tags)


def try_decompose(g: DirectedMultigraph) -> Optional[Decomposition]:
    try:
        return ct_decompose(g)
    except (NotCTDecomposable, NotSimplicial, NotConnected):
        return None


def reassemble(g: DirectedMultigraph, d: Decomposition) -> DirectedMultigraph:
    """Glue the components back together at their shared cut vertices.

    Components are attached in block-tree order, each at the single
    vertex it shares with what has been built so far.
    """
    pending = list(d.components)
    first = pending.pop(0)
    acc = induced_full_subgraph(g, first.vertices)
    while pending:
        for i, c in enumerate(pending):
            shared = [v for v in c.vertices if v in acc]
            if shared:
                break
        else:
            raise ValueError("components do not form a connected block tree")
        pending.pop(i)
        (v,) = shared
        piece = induced_full_subgraph(g, c.vertices)
        acc = glue(acc, piece, GlueSpec(v, v, v), strict=True)
    return acc
