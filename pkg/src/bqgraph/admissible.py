"""Admissible boundaries: largest vertex sets with no directed path inside.

The search is exact. Among several maximum sets the one chosen is the
lexicographically first in canonical-labelling order (tree-component
vertices first), so isomorphic graphs get corresponding boundaries and
isomorphic quotients. Graphs too
big for canonical labelling fall back to vertex-name order, which keeps
the result deterministic but no longer relabelling-invariant.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Optional

from . import iso
from .classify import ct_decompose, try_decompose
from .errors import SizeLimit
from .graph import DirectedMultigraph, reachable_from
from .quotient import QuotientResult, boundary_quotient

MAX_VERTICES = 20


@dataclass(frozen=True)
class AdmissibleBoundary:
    vertex_set: frozenset
    # for each unordered pair (u, v), u < v by name, a shortest directed path
    # (edge ids) joining them in one direction; pairs with no path are absent
    witness: Mapping[tuple[str, str], tuple[str, ...]] = field(repr=False, compare=False)

    def sorted(self) -> list[str]:
        return sorted(self.vertex_set)


def _shortest_paths_from(g: DirectedMultigraph, u: str) -> dict[str, tuple[str, ...]]:
    prev: dict[str, tuple[str, str]] = {}
    queue = deque([u])
    seen = {u}
    while queue:
        x = queue.popleft()
        for e in g.out_edges[x]:
            if e.dst not in seen:
                seen.add(e.dst)
                prev[e.dst] = (x, e.id)
                queue.append(e.dst)
    paths = {}
    for v in prev:
        path, x = [], v
        while x != u:
            x, eid = prev[x]
            path.append(eid)
        paths[v] = tuple(reversed(path))
    return paths


def _witness(g):
    paths = {u: _shortest_paths_from(g, u) for u in g.vertices}
    out = {}
    for u in g.vertices:
        for v in g.vertices:
            if u < v:
                p = paths[u].get(v) or paths[v].get(u)
                if p:
                    out[(u, v)] = p
    return out


def search_order(g: DirectedMultigraph) -> list[str]:
    """Vertex order used to pick among maximum antichains.

    Canonical order, except that vertices of tree components come first
    when the graph is CT-decomposable. A cycle vertex has the same
    reachability to the rest of the graph as every vertex of its strongly
    connected piece, and that piece always meets a tree component in a
    mixed graph, so the greedy choice below then never needs a vertex that
    lies only on cycles.
    """
    if g.n_vertices <= iso._limit(iso.ISO_LIMIT):
        base = iso.canonical_labeling(g)
    else:
        base = sorted(g.vertices)
    d = try_decompose(g)
    if d is None:
        return base
    in_trees = {v for c in d.components if c.tag.is_tree for v in c.vertices}
    return sorted(base, key=lambda v: v not in in_trees)


def maximum_antichain(g: DirectedMultigraph, order: Optional[list[str]] = None) -> list[str]:
    """First maximum-cardinality set (in ``order``) with no internal directed path."""
    n = g.n_vertices
    if n > MAX_VERTICES:
        raise SizeLimit(f"admissible boundary search is exact only up to {MAX_VERTICES} vertices")
    order = order or search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    conflict = [0] * n
    for v in g.vertices:
        for w in reachable_from(g, v):
            if w != v:
                conflict[pos[v]] |= 1 << pos[w]
                conflict[pos[w]] |= 1 << pos[v]

    @lru_cache(maxsize=None)
    def mis(mask):
        if not mask:
            return 0
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask & ~low
        take = 1 + mis(rest & ~conflict[i])
        if not conflict[i] & rest:
            return take
        return max(take, mis(rest))

    cand = (1 << n) - 1
    target = mis(cand)
    chosen = []
    for i in range(n):
        bit = 1 << i
        if not cand & bit:
            continue
        cand &= ~bit
        rest = cand & ~conflict[i]
        if len(chosen) + 1 + mis(rest) == target:
            chosen.append(order[i])
            cand = rest
    return chosen


def admissible_boundary(g: DirectedMultigraph) -> AdmissibleBoundary:
    best = maximum_antichain(g)
    vs = frozenset(best) if len(best) >= 2 else frozenset()
    return AdmissibleBoundary(vs, _witness(g))


def admissible_quotient(g: DirectedMultigraph) -> QuotientResult:
    return boundary_quotient(g, admissible_boundary(g).vertex_set)


def admissible_in_tree_components(g: DirectedMultigraph) -> bool:
    """Every admissible-boundary vertex lies in some tree component."""
    d = ct_decompose(g)
    in_trees = {v for c in d.components if c.tag.is_tree for v in c.vertices}
    return admissible_boundary(g).vertex_set <= in_trees
