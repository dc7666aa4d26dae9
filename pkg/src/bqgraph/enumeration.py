"""Exhaustive isomorphism-class enumeration of small simplicial digraphs.

Graphs on k vertices are stored as integer bitmasks, bit ``i*k + j`` set
when the edge i -> j is present. Classes on k+1 vertices come from
extending every class on k vertices by one vertex in all 4**k ways and
keeping the minimum image over all vertex permutations, computed in bulk
with numpy.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterator, Optional

import numpy as np

from .classify import try_decompose
from .errors import SizeLimit
from .graph import DirectedMultigraph, build_graph, is_connected
from .iso import canonical_form

MAX_ENUMERATION = 5


def _pairs(k):
    return [(i, j) for i in range(k) for j in range(k) if i != j]


def _canonical_masks(masks: np.ndarray, k: int) -> np.ndarray:
    best = np.full(masks.shape, np.iinfo(np.int64).max, dtype=np.int64)
    bits = {(i, j): (masks >> (i * k + j)) & 1 for i, j in _pairs(k)}
    for p in permutations(range(k)):
        img = np.zeros_like(masks)
        for (i, j), b in bits.items():
            img |= b << (p[i] * k + p[j])
        np.minimum(best, img, out=best)
    return best


@lru_cache(maxsize=None)
def class_masks(k: int) -> np.ndarray:
    """Sorted canonical masks, one per isomorphism class on exactly k vertices."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > MAX_ENUMERATION:
        raise SizeLimit(f"exhaustive enumeration stops at {MAX_ENUMERATION} vertices")
    if k == 1:
        return np.zeros(1, dtype=np.int64)
    old = class_masks(k - 1)
    base = np.zeros_like(old)
    for i, j in _pairs(k - 1):
        base |= ((old >> (i * (k - 1) + j)) & 1) << (i * k + j)
    codes = np.arange(4 ** (k - 1), dtype=np.int64)
    ext = np.zeros_like(codes)
    new = k - 1
    for i in range(k - 1):
        ext |= ((codes >> (2 * i)) & 1) << (i * k + new)
        ext |= ((codes >> (2 * i + 1)) & 1) << (new * k + i)
    cand = (base[:, None] | ext[None, :]).ravel()
    return np.unique(_canonical_masks(cand, k))


def mask_to_graph(mask: int, k: int) -> DirectedMultigraph:
    vs = [f"v{i + 1}" for i in range(k)]
    edges = []
    for i, j in _pairs(k):
        if (int(mask) >> (i * k + j)) & 1:
            edges.append((f"e{len(edges) + 1}", vs[i], vs[j]))
    return build_graph(vs, edges)


@lru_cache(maxsize=None)
def _graphs_on(k: int) -> tuple[DirectedMultigraph, ...]:
    return tuple(mask_to_graph(m, k) for m in class_masks(k))


def enumerate_graphs(n: int, predicate: Optional[Callable[[DirectedMultigraph], bool]] = None
                     ) -> Iterator[DirectedMultigraph]:
    """One simplicial digraph per isomorphism class on 1..n vertices.

    Classes come out by vertex count, then by canonical mask. Above
    ``MAX_ENUMERATION`` vertices this raises SizeLimit.
    """
    if n > MAX_ENUMERATION:
        raise SizeLimit(f"exhaustive enumeration stops at {MAX_ENUMERATION} vertices (asked for {n})")
    for k in range(1, n + 1):
        for g in _graphs_on(k):
            if predicate is None or predicate(g):
                yield g


@lru_cache(maxsize=None)
def connected_classes(n: int) -> tuple[DirectedMultigraph, ...]:
    return tuple(enumerate_graphs(n, is_connected))


# -- CT-decomposable graphs by leaf-block growth -------------------------------

def _grow(g: DirectedMultigraph, limit: int):
    """All graphs made from ``g`` by attaching one new leaf block."""
    k = g.n_vertices
    m = g.n_edges
    if k >= limit:
        return
    for anchor in g.vertices:
        new = f"v{k + 1}"
        vs = list(g.vertices) + [new]
        base = [(e.id, e.src, e.dst) for e in g.edges]
        yield build_graph(vs, base + [(f"e{m + 1}", anchor, new)])
        yield build_graph(vs, base + [(f"e{m + 1}", new, anchor)])
        for length in range(2, limit - k + 2):
            fresh = [f"v{k + i}" for i in range(1, length)]
            ring = [anchor] + fresh + [anchor]
            cyc = [(f"e{m + i + 1}", ring[i], ring[i + 1]) for i in range(length)]
            yield build_graph(list(g.vertices) + fresh, base + cyc)


@lru_cache(maxsize=None)
def ct_classes(n: int) -> tuple[DirectedMultigraph, ...]:
    """Connected CT-decomposable classes on 1..n vertices.

    Every such graph has a leaf block of its block tree, a bridge or a
    directed cycle, whose removal leaves a smaller graph of the same kind,
    so growing leaf blocks from the one-vertex graph reaches all of them.
    """
    seen = {}
    frontier = [build_graph(["v1"], [])]
    seen[canonical_form(frontier[0])] = frontier[0]
    while frontier:
        nxt = []
        for g in frontier:
            for h in _grow(g, n):
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = h
                    nxt.append(h)
        frontier = nxt
    out = sorted(seen.items(), key=lambda kv: (kv[1].n_vertices, kv[1].n_edges, kv[0]))
    return tuple(g for _, g in out)


def decomposable(g: DirectedMultigraph) -> bool:
    return try_decompose(g) is not None
