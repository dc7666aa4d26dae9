"""Random generators and the claim-verification suite behind ``verify``.

Every random instance draws from its own child seed, derived from the run
seed, the claim id and the instance number, so a failure can be replayed
alone with ``instance_from_seed`` and the report does not depend on the
order in which instances are processed.
"""

from __future__ import annotations

import json
import random
import time
import zlib
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Optional

import numpy as np

from . import fixtures as fx
from .admissible import admissible_boundary, admissible_quotient
from .classify import (
    TRIVIAL,
    LoopGraph,
    classify_type,
    ct_decompose,
    is_mixed_maximal_type,
    reassemble,
)
from .enumeration import MAX_ENUMERATION, connected_classes, ct_classes, enumerate_graphs
from .errors import GraphError, NotCTDecomposable, Unsatisfiable
from .graph import (
    DirectedMultigraph,
    build_graph,
    induced_full_subgraph,
    relabel,
    size,
)
from .index import (
    ONE,
    Chain,
    all_full_subgraphs,
    ind_between,
    ind_subgraph,
    ind_trivial,
    verify_chain,
    verify_dual_chain,
    Exp,
)
from .io import emit_json_graph
from .iso import are_isomorphic, canonical_form, is_valid_mapping
from .quotient import GlueSpec, boundary_quotient, glue, iterated_glue, subgraph_boundary_quotient

__all__ = [
    "KINDS",
    "SuiteConfig",
    "ClaimResult",
    "TrialReport",
    "child_seed",
    "random_graph",
    "random_relabel",
    "enumerate_graphs",
    "brute_force_isomorphic",
    "minimize",
    "run_suite",
    "instance_from_seed",
]

KINDS = ("simplicial-connected", "circulant", "growing-tree", "mixed-maximal", "multigraph")


# -- seeds ---------------------------------------------------------------------

def _key(part) -> int:
    return part if isinstance(part, int) else zlib.crc32(str(part).encode())


def child_seed(seed: int, *path) -> int:
    """Independent 63-bit seed for the stream named by ``path``."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(_key(p) for p in path))
    return int(ss.generate_state(1, np.uint64)[0] >> np.uint64(1))


# -- generators ----------------------------------------------------------------

def _shuffled_build(rng: random.Random, n: int, edges: list[tuple[int, int]]) -> DirectedMultigraph:
    """Build from index pairs with random vertex names, vertex order and edge order."""
    names = [f"v{i + 1}" for i in range(n)]
    rng.shuffle(names)
    order = sorted(range(n), key=lambda i: names[i])
    rng.shuffle(order)
    edges = list(edges)
    rng.shuffle(edges)
    return build_graph([names[i] for i in order],
                       [(f"e{k + 1}", names[a], names[b]) for k, (a, b) in enumerate(edges)])


def _simplicial_connected(rng, n):
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        edges.add((i, j) if rng.random() < 0.5 else (j, i))
    free = [(a, b) for a in range(n) for b in range(n) if a != b and (a, b) not in edges]
    extra = rng.randint(0, min(len(free), n))
    edges.update(rng.sample(free, extra))
    return sorted(edges)


def _growing_tree(rng, n):
    return [(rng.randrange(i), i) for i in range(1, n)]


def _ct_graph(rng, n):
    """Random CT-decomposable graph built from leaf blocks."""
    edges, count = [], 1
    while count < n:
        anchor = rng.randrange(count)
        room = n - count
        if rng.random() < 0.5:
            edges.append((anchor, count) if rng.random() < 0.5 else (count, anchor))
            count += 1
        else:
            length = rng.randint(2, room + 1)
            ring = [anchor] + list(range(count, count + length - 1)) + [anchor]
            edges.extend(zip(ring, ring[1:]))
            count += length - 1
    return edges


def _multigraph(rng, n, max_edges):
    m = rng.randint(0, max_edges)
    return [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]


def random_graph(kind: str, n: int, seed: int, max_edges: Optional[int] = None) -> DirectedMultigraph:
    """Deterministic random graph of the requested class on exactly ``n`` vertices.

    ``multigraph`` draws up to ``max_edges`` (default 2n) edges between
    uniformly chosen endpoints, so loops and parallel edges occur.
    """
    if n < 1:
        raise Unsatisfiable("a graph needs at least one vertex")
    rng = random.Random(seed)
    if kind == "simplicial-connected":
        return _shuffled_build(rng, n, _simplicial_connected(rng, n))
    if kind == "circulant":
        if n < 2:
            raise Unsatisfiable("circulants need at least two vertices")
        return _shuffled_build(rng, n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "growing-tree":
        return _shuffled_build(rng, n, _growing_tree(rng, n))
    if kind == "mixed-maximal":
        if n < 3:
            raise Unsatisfiable("a mixed maximal type needs a cycle and a bridge, hence three vertices")
        while True:
            g = _shuffled_build(rng, n, _ct_graph(rng, n))
            if is_mixed_maximal_type(g):
                return g
    if kind == "multigraph":
        return _shuffled_build(rng, n, _multigraph(rng, n, 2 * n if max_edges is None else max_edges))
    raise ValueError(f"unknown generator kind {kind!r}; expected one of {', '.join(KINDS)}")


def random_relabel(g: DirectedMultigraph, rng: random.Random, prefix: str = "u"):
    """Copy of ``g`` with fresh shuffled names and orders, plus the vertex map."""
    new = [f"{prefix}{i + 1}" for i in range(g.n_vertices)]
    rng.shuffle(new)
    vmap = dict(zip(g.vertices, new))
    eids = [f"{prefix}e{i + 1}" for i in range(g.n_edges)]
    rng.shuffle(eids)
    emap = {e.id: x for e, x in zip(g.edges, eids)}
    order = list(new)
    rng.shuffle(order)
    h = relabel(g, vmap, emap, order)
    edges = list(h.edges)
    rng.shuffle(edges)
    return build_graph(h.vertices, [(e.id, e.src, e.dst) for e in edges]), vmap


# -- brute-force oracle ---------------------------------------------------------

def brute_force_isomorphic(g1: DirectedMultigraph, g2: DirectedMultigraph) -> bool:
    """Try every vertex bijection and compare multiplicity matrices."""
    if g1.n_vertices != g2.n_vertices or g1.n_edges != g2.n_edges:
        return False
    a = g1.vertices
    for p in permutations(g2.vertices):
        f = dict(zip(a, p))
        if all(g1.mult(u, v) == g2.mult(f[u], f[v]) for u in a for v in a):
            return True
    return False


# -- counterexample minimization -----------------------------------------------

def _drop_edge(g, eid):
    return build_graph(g.vertices, [(e.id, e.src, e.dst) for e in g.edges if e.id != eid])


def _drop_vertex(g, v):
    return build_graph([x for x in g.vertices if x != v],
                       [(e.id, e.src, e.dst) for e in g.edges if v not in (e.src, e.dst)])


def minimize(g: DirectedMultigraph, fails: Callable[[DirectedMultigraph], bool]) -> DirectedMultigraph:
    """Greedily delete edges, then vertices, while ``fails`` stays true."""

    def still(h):
        try:
            return bool(fails(h))
        except GraphError:
            return False

    changed = True
    while changed:
        changed = False
        for e in list(g.edges):
            h = _drop_edge(g, e.id)
            if still(h):
                g, changed = h, True
        for v in list(g.vertices):
            if g.n_vertices == 1:
                break
            h = _drop_vertex(g, v)
            if still(h):
                g, changed = h, True
    return g


# -- reports -------------------------------------------------------------------

def _doc(g: DirectedMultigraph):
    return json.loads(emit_json_graph(g))


@dataclass
class ClaimResult:
    id: str
    description: str
    asserted: bool = True
    instances: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0

    def fail(self, detail: str, graph: Optional[DirectedMultigraph] = None, seed: Optional[int] = None,
             minimized: Optional[DirectedMultigraph] = None, **inputs):
        entry = {"detail": detail, "seed": seed}
        if graph is not None:
            entry["graph"] = _doc(graph)
        if minimized is not None:
            entry["minimized"] = _doc(minimized)
        entry.update(inputs)
        self.failures.append(entry)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, timings: bool = False):
        out = {"id": self.id, "description": self.description, "asserted": self.asserted,
               "instances": self.instances, "failure_count": len(self.failures), "failures": self.failures}
        if timings:
            out["wall_time"] = round(self.wall_time, 3)
        return out


@dataclass
class TrialReport:
    seed: int
    trials: int
    max_vertices: int
    claims: list[ClaimResult] = field(default_factory=list)
    experiments: dict = field(default_factory=dict)

    @property
    def failure_count(self) -> int:
        return sum(len(c.failures) for c in self.claims if c.asserted)

    def claim(self, cid: str) -> ClaimResult:
        return next(c for c in self.claims if c.id == cid)

    def to_json(self, timings: bool = False):
        return {
            "seed": self.seed,
            "trials": self.trials,
            "max_vertices": self.max_vertices,
            "failure_count": self.failure_count,
            "claims": [c.to_json(timings) for c in self.claims],
            "experiments": self.experiments,
        }

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), indent=2, sort_keys=False) + "\n"


@dataclass
class SuiteConfig:
    """Knobs for ``run_suite``. ``None`` counts default to ``trials``."""

    seed: int = 1
    trials: int = 10
    max_vertices: int = 6
    random_vertices: int = 8  # vertex cap for random graphs
    random_edges: int = 16
    exhaustive_vertices: int = 5  # sweep for the index claims
    pair_vertices: int = 4  # inter-graph index claim
    total_quotient_instances: Optional[int] = None
    index_instances: Optional[int] = None
    chain_instances: Optional[int] = None
    relabel_instances: Optional[int] = None
    oracle_pairs: Optional[int] = None
    claims: Optional[Iterable[str]] = None  # run a subset; None runs all
    experiments: bool = True
    timings: bool = False
    boundary_quotient: Callable = boundary_quotient
    subgraph_quotient: Callable = subgraph_boundary_quotient

    def count(self, value):
        return self.trials if value is None else value

    @property
    def sweep_vertices(self):
        return min(self.exhaustive_vertices, self.max_vertices, MAX_ENUMERATION)


def instance_from_seed(seed: int, random_vertices: int = 8, random_edges: int = 16,
                       kinds=("multigraph", "simplicial-connected")) -> DirectedMultigraph:
    """The random input a claim draws from ``seed``; used to replay failures."""
    rng = random.Random(seed)
    kind = kinds[rng.randrange(len(kinds))]
    n = rng.randint(1, random_vertices)
    return random_graph(kind, n, rng.getrandbits(63), max_edges=random_edges)


def _instance_graph(cfg: SuiteConfig, cid: str, i: int):
    seed = child_seed(cfg.seed, cid, i)
    return seed, instance_from_seed(seed, cfg.random_vertices, cfg.random_edges)


# -- claims --------------------------------------------------------------------

def _claim_total_quotient(cfg: SuiteConfig) -> ClaimResult:
    r = ClaimResult("c01-total-quotient",
                    "collapsing all of V(G) gives L_|E(G)|; every boundary quotient conserves edges")
    bq = cfg.boundary_quotient

    def problem(g, boundary):
        q = bq(g, frozenset(g.vertices)).graph
        part = bq(g, boundary).graph
        for label, h in (("total", q), ("partial", part)):
            if h.n_edges != g.n_edges:
                return f"edge conservation ({label} boundary): {g.n_edges} edges became {h.n_edges}"
        want = LoopGraph(g.n_edges) if g.n_edges else TRIVIAL
        if classify_type(q) != want:
            return f"total quotient classifies as {classify_type(q)}, expected {want}"
        inside = sum(1 for e in g.edges if e.src in boundary and e.dst in boundary)
        loops_outside = sum(1 for e in g.edges if e.is_loop and e.src not in boundary)
        if sum(1 for e in part.edges if e.is_loop) != inside + loops_outside:
            return "loop count after collapsing does not match edges inside the boundary"
        return None

    for i in range(cfg.count(cfg.total_quotient_instances)):
        seed, g = _instance_graph(cfg, r.id, i)
        rng = random.Random(seed ^ 1)
        boundary = frozenset(v for v in g.vertices if rng.random() < 0.5)
        r.instances += 1
        msg = problem(g, boundary)
        if msg:
            small = minimize(g, lambda h: problem(h, boundary & set(h.vertices)) is not None)
            r.fail(msg, g, seed, small, boundary=sorted(boundary))
    return r


def fixture_checks() -> list[tuple[str, Callable[[], bool]]]:
    """Named checks against the worked examples; each returns True on success."""

    def iso(a, b):
        return are_isomorphic(a, b) is not None

    def three(boundary, loop, other_edge, other_vertex):
        res = boundary_quotient(fx.THREE_VERTEX, boundary)
        g = res.graph
        b = res.base_point
        return (sorted(g.vertices) == sorted([b, other_vertex])
                and res.loop_edges() == [loop]
                and g.edge_index[other_edge].src == b and g.edge_index[other_edge].dst == other_vertex)

    def c4():
        res = boundary_quotient(fx.circulant(4), {"v1", "v2"})
        expected = glue(fx.loop_graph(1, "w"), fx.circulant(3, "w"), GlueSpec("w", "w1"))
        return iso(res.graph, expected) and res.loop_edges() == ["e1"]

    def g8():
        d = ct_decompose(fx.G8)
        comps = [(set(c.vertices), str(c.tag)) for c in d.components]
        built = iterated_glue(fx.T4, [(fx.G8_CYCLE, GlueSpec("v5", "b1"))])
        return (str(d) == "(C5, T)"
                and comps == [({"v1", "v2", "v3", "v4", "v5"}, "C5"), ({"v5", "v6", "v7", "v8"}, "T")]
                and d.cut_vertices == {"v5"}
                and iso(reassemble(fx.G8, d), fx.G8) and iso(built, fx.G8))

    def trees():
        bs = [admissible_boundary(t).vertex_set for t in (fx.T1, fx.T2, fx.T3)]
        return bs == [frozenset(), {"v2", "v3"}, {"v2", "v3"}]

    def tree_quotients():
        q2, q3 = admissible_quotient(fx.T2).graph, admissible_quotient(fx.T3).graph
        return iso(q2, q3) and not iso(fx.T2, fx.T3)

    return [
        ("two-vertex total quotient is L_1", lambda: classify_type(boundary_quotient(fx.TWO_VERTEX, {"v1", "v2"}).graph) == LoopGraph(1)),
        ("three-vertex quotient by {v1,v2}", lambda: three({"v1", "v2"}, "e1", "e2", "v3")),
        ("three-vertex quotient by {v1,v3}", lambda: three({"v1", "v3"}, "e2", "e1", "v2")),
        ("three-vertex total quotient is L_2", lambda: classify_type(boundary_quotient(fx.THREE_VERTEX, {"v1", "v2", "v3"}).graph) == LoopGraph(2)),
        ("C_3 total quotient is L_3", lambda: classify_type(boundary_quotient(fx.circulant(3), {"v1", "v2", "v3"}).graph) == LoopGraph(3)),
        ("C_4 by {v1,v2} is L_1 glued to C_3", c4),
        ("G8 decomposes as (C5, T) and reassembles", g8),
        ("T1, T2, T3 admissible boundaries", trees),
        ("T2 and T3 quotients agree while T2 and T3 differ", tree_quotients),
        ("mixed examples have boundary {v4,v5}",
         lambda: all(admissible_boundary(g).vertex_set == {"v4", "v5"} for g in (fx.MIXED_OUT, fx.MIXED_IN))),
        ("mixed example quotients differ",
         lambda: not iso(admissible_quotient(fx.MIXED_OUT).graph, admissible_quotient(fx.MIXED_IN).graph)),
        ("circulants have empty admissible boundary",
         lambda: all(not admissible_boundary(fx.circulant(n)).vertex_set for n in range(2, 8))),
    ]


def _claim_fixtures(cfg: SuiteConfig) -> ClaimResult:
    r = ClaimResult("c02-fixtures", "worked examples reproduced up to isomorphism")
    for name, check in fixture_checks():
        r.instances += 1
        try:
            ok = check()
        except GraphError as exc:
            ok, name = False, f"{name}: {type(exc).__name__}: {exc}"
        if not ok:
            r.fail(name)
    return r


@dataclass
class _Sweep:
    # (seed or None, graph, {H: value or exception text})
    rows: list


def _sweep(cfg: SuiteConfig) -> _Sweep:
    rows = []
    graphs = [(None, g) for g in connected_classes(cfg.sweep_vertices)]
    graphs += [_instance_graph(cfg, "index-sweep", i) for i in range(cfg.count(cfg.index_instances))]
    for seed, g in graphs:
        values = {}
        for h in all_full_subgraphs(g):
            try:
                values[h] = ind_subgraph(g, h, quotient=cfg.subgraph_quotient)
            except GraphError as exc:
                values[h] = f"{type(exc).__name__}: {exc}"
        rows.append((seed, g, values))
    return _Sweep(rows)


def _claim_index_identity(cfg: SuiteConfig, sweep: _Sweep) -> ClaimResult:
    r = ClaimResult("c03-index-identity", "Ind_G(H) = Ind_G(1) / Ind_H(1) as exact exponents")
    for seed, g, values in sweep.rows:
        for h, v in values.items():
            r.instances += 1
            if isinstance(v, str):
                r.fail(v, g, seed, subgraph=sorted(h))
                continue
            want = ind_trivial(g) / ind_trivial(induced_full_subgraph(g, h))
            if v != want:
                r.fail(f"index {v} but ratio {want}", g, seed, subgraph=sorted(h))
    return r


def _claim_corollaries(cfg: SuiteConfig, sweep: _Sweep) -> ClaimResult:
    r = ClaimResult("c04-index-corollaries", "Ind_G(H) = 1 exactly for H = G, and > 1 exactly for proper H")
    for seed, g, values in sweep.rows:
        full = frozenset(g.vertices)
        for h, v in values.items():
            r.instances += 1
            if isinstance(v, str):
                r.fail(v, g, seed, subgraph=sorted(h))
            elif (v == ONE) != (h == full) or (v > ONE) != (h < full):
                r.fail(f"index {v} for a {'full' if h == full else 'proper'} subgraph", g, seed, subgraph=sorted(h))
    return r


def _random_chain(rng: random.Random, g: DirectedMultigraph) -> Chain:
    order = list(g.vertices)
    rng.shuffle(order)
    depth = rng.randint(1, 4)
    sizes = sorted(rng.randint(1, g.n_vertices) for _ in range(depth))
    return Chain([order[:k] for k in sizes])


def _chain_instances(cfg: SuiteConfig):
    for i in range(cfg.count(cfg.chain_instances)):
        seed, g = _instance_graph(cfg, "chains", i)
        yield seed, g, _random_chain(random.Random(seed ^ 2), g)


def _chain_inputs(chain):
    return {"chain": [sorted(lv) for lv in chain.levels]}


def _claim_chain_rule(cfg: SuiteConfig) -> ClaimResult:
    r = ClaimResult("c05-chain-rule", "Ind_G(K) = Ind_G(H) * Ind_H(K) and the telescoping product")
    for seed, g, chain in _chain_instances(cfg):
        r.instances += 1
        rep = verify_chain(g, chain)
        if not rep.passed:
            r.fail(f"direct {rep.direct} vs telescoped {rep.telescoped}; failing triples {rep.chain_rule_failures}",
                   g, seed, **_chain_inputs(chain))
    return r


def _claim_dual_embedding(cfg: SuiteConfig) -> ClaimResult:
    r = ClaimResult("c06a-dual-chain-embedding",
                    "for K_i inside K_j, G/K_j has an induced embedding into G/K_i")
    for seed, g, chain in _chain_instances(cfg):
        for step in verify_dual_chain(g, chain, force=True):
            r.instances += 1
            if not step.embedded:
                inner, outer = chain.levels[step.inner - 1], chain.levels[step.outer - 1]
                small = minimize(g, lambda h: _no_dual_embedding(h, inner, outer))
                r.fail(f"G/K_{step.outer} does not embed in G/K_{step.inner}", g, seed, small,
                       inner=sorted(inner), outer=sorted(outer), **_chain_inputs(chain))
    return r


def _no_dual_embedding(h, inner, outer):
    vs = set(h.vertices)
    inner, outer = inner & vs, outer & vs
    if not inner or not outer or not inner <= outer:
        return False
    a = subgraph_boundary_quotient(h, outer).graph
    b = subgraph_boundary_quotient(h, inner).graph
    return ind_between(a, b, force=True).is_zero


def _claim_duality(cfg: SuiteConfig) -> ClaimResult:
    r = ClaimResult("c06b-duality-identity",
                    "Ind_{G/K_i}(1) / Ind_{G/K_j}(1) = Ind_{K_j}(K_i) for every dual step")
    for seed, g, chain in _chain_instances(cfg):
        for step in verify_dual_chain(g, chain, force=True):
            r.instances += 1
            if not step.duality_holds:
                r.fail(f"step {step.inner}<{step.outer}: ratio {step.size_ratio} vs {step.expected}",
                       g, seed, **_chain_inputs(chain))
    return r


def _claim_range(cfg: SuiteConfig, sweep: _Sweep) -> ClaimResult:
    r = ClaimResult("c07-index-range", "every index value of G lies in {e^(|G|-k) : k = 1..|G|}")
    for seed, g, values in sweep.rows:
        if size(g) > 12:
            continue
        r.instances += 1
        bad = [v for v in values.values() if isinstance(v, str)]
        if bad:
            r.fail(bad[0], g, seed)
            continue
        allowed = {Exp(size(g) - k) for k in range(1, size(g) + 1)}
        stray = sorted(v.log for v in set(values.values()) - allowed)
        if stray:
            r.fail(f"exponents {stray} fall outside the range", g, seed)
    return r


def _claim_inter_graph(cfg: SuiteConfig) -> ClaimResult:
    r = ClaimResult("c08-inter-graph-index", "Ind between two graphs is 1 both ways exactly when they are isomorphic")
    classes = list(connected_classes(min(cfg.pair_vertices, cfg.max_vertices, MAX_ENUMERATION)))
    rng = random.Random(child_seed(cfg.seed, r.id))
    shuffled = [random_relabel(g, rng)[0] for g in classes]
    for a, ga in enumerate(classes):
        for b in range(a, len(classes)):
            gb = shuffled[b]
            r.instances += 1
            both = ind_between(ga, gb) == ONE and ind_between(gb, ga) == ONE
            if both != (a == b):
                r.fail(f"classes {a} and {b}: mutual index one is {both}", ga, other=_doc(gb))
    return r


def _claim_relabel(cfg: SuiteConfig) -> ClaimResult:
    r = ClaimResult("c09-relabel-invariance",
                    "indices and admissible quotients are unchanged by relabelling")
    for i in range(cfg.count(cfg.relabel_instances)):
        seed, g = _instance_graph(cfg, r.id, i)
        h, vmap = random_relabel(g, random.Random(seed ^ 3))
        r.instances += 1
        for sub in all_full_subgraphs(g):
            if ind_subgraph(g, sub) != ind_subgraph(h, {vmap[v] for v in sub}):
                r.fail("index changed under relabelling", g, seed, subgraph=sorted(sub), relabelled=_doc(h))
                break
        else:
            if are_isomorphic(admissible_quotient(g).graph, admissible_quotient(h).graph) is None:
                r.fail("admissible quotients not isomorphic", g, seed, relabelled=_doc(h))
    return r


def _oracle_pool(cfg: SuiteConfig, rng: random.Random):
    top = min(cfg.max_vertices, 6)
    pool = list(enumerate_graphs(min(top, MAX_ENUMERATION)))
    if top >= 6:
        pool += [g for g in ct_classes(6) if g.n_vertices == 6]
        pool += [random_graph("simplicial-connected", 6, rng.getrandbits(63)) for _ in range(200)]
    return pool


def _claim_oracle(cfg: SuiteConfig) -> ClaimResult:
    r = ClaimResult("c10-iso-oracle", "are_isomorphic agrees with brute-force permutation search")
    rng = random.Random(child_seed(cfg.seed, r.id))
    pool = _oracle_pool(cfg, rng)
    by_shape: dict = {}
    for g in pool:
        by_shape.setdefault((g.n_vertices, g.n_edges), []).append(g)
    for i in range(cfg.count(cfg.oracle_pairs)):
        g = rng.choice(pool)
        if i % 2:
            other = rng.choice(by_shape[(g.n_vertices, g.n_edges)])
        else:
            other = g
        h = random_relabel(other, rng)[0]
        r.instances += 1
        fast = are_isomorphic(g, h)
        slow = brute_force_isomorphic(g, h)
        if (fast is not None) != slow or (fast is not None and not is_valid_mapping(g, h, fast)):
            r.fail(f"fast says {fast is not None}, oracle says {slow}", g, other=_doc(h))
    return r


# -- experiments (reported, not asserted) ---------------------------------------

def converse_experiment(max_vertices: int = 6) -> dict:
    """Look for non-isomorphic mixed-type graphs with isomorphic admissible quotients."""
    graphs = [g for g in ct_classes(max_vertices) if is_mixed_maximal_type(g)]
    groups: dict[bytes, list] = {}
    for g in graphs:
        groups.setdefault(canonical_form(admissible_quotient(g).graph), []).append(g)
    pairs = []
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                a, b = members[i], members[j]
                pairs.append({
                    "first": _doc(a), "first_boundary": admissible_boundary(a).sorted(),
                    "second": _doc(b), "second_boundary": admissible_boundary(b).sorted(),
                })
    return {"max_vertices": max_vertices, "graphs_checked": len(graphs),
            "violating_pair_count": len(pairs), "violating_pairs": pairs}


def ct_catalog(max_vertices: int = 6, listed_up_to: int = 4) -> dict:
    """Connected simplicial classes that admit no CT-decomposition."""
    exhaustive = min(max_vertices, MAX_ENUMERATION)
    per_n = {}
    listed = []
    tri = canonical_form(fx.TRIANGLE_DAG)
    triangle_seen = False
    for g in connected_classes(exhaustive):
        row = per_n.setdefault(g.n_vertices, {"classes": 0, "decomposable": 0, "not_decomposable": 0})
        row["classes"] += 1
        try:
            ct_decompose(g)
            row["decomposable"] += 1
        except NotCTDecomposable as exc:
            row["not_decomposable"] += 1
            triangle_seen = triangle_seen or canonical_form(g) == tri
            if g.n_vertices <= listed_up_to:
                listed.append({"graph": _doc(g), "block_vertices": list(exc.block_vertices),
                               "block_edges": list(exc.block_edges)})
    for n in range(exhaustive + 1, max_vertices + 1):
        per_n[n] = {"classes": None, "decomposable": sum(1 for g in ct_classes(n) if g.n_vertices == n),
                    "not_decomposable": None}
    return {
        "exhaustive_up_to": exhaustive,
        "per_vertex_count": {str(k): v for k, v in sorted(per_n.items())},
        "triangle_dag_listed": triangle_seen,
        "catalog": listed,
    }


# -- driver --------------------------------------------------------------------

CLAIM_IDS = (
    "c01-total-quotient", "c02-fixtures", "c03-index-identity", "c04-index-corollaries",
    "c05-chain-rule", "c06a-dual-chain-embedding", "c06b-duality-identity", "c07-index-range",
    "c08-inter-graph-index", "c09-relabel-invariance", "c10-iso-oracle",
)


def run_suite(seed: int = 1, trials: int = 10, max_vertices: int = 6, config: Optional[SuiteConfig] = None,
              **overrides) -> TrialReport:
    """Run every asserted claim, then the experiments, and collect a report."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    cfg = config or SuiteConfig(seed=seed, trials=trials, max_vertices=max_vertices, **overrides)
    wanted = set(cfg.claims) if cfg.claims is not None else set(CLAIM_IDS)
    report = TrialReport(cfg.seed, cfg.trials, cfg.max_vertices)
    sweep_cache = []

    def sweep():
        if not sweep_cache:
            sweep_cache.append(_sweep(cfg))
        return sweep_cache[0]

    runners = {
        "c01-total-quotient": lambda: _claim_total_quotient(cfg),
        "c02-fixtures": lambda: _claim_fixtures(cfg),
        "c03-index-identity": lambda: _claim_index_identity(cfg, sweep()),
        "c04-index-corollaries": lambda: _claim_corollaries(cfg, sweep()),
        "c05-chain-rule": lambda: _claim_chain_rule(cfg),
        "c06a-dual-chain-embedding": lambda: _claim_dual_embedding(cfg),
        "c06b-duality-identity": lambda: _claim_duality(cfg),
        "c07-index-range": lambda: _claim_range(cfg, sweep()),
        "c08-inter-graph-index": lambda: _claim_inter_graph(cfg),
        "c09-relabel-invariance": lambda: _claim_relabel(cfg),
        "c10-iso-oracle": lambda: _claim_oracle(cfg),
    }
    for cid in CLAIM_IDS:
        if cid not in wanted:
            continue
        start = time.perf_counter()
        result = runners[cid]()
        result.wall_time = time.perf_counter() - start
        report.claims.append(result)
    if cfg.experiments:
        top = min(cfg.max_vertices, 6)
        report.experiments = {
            "converse_invariance": converse_experiment(top),
            "ct_catalog": ct_catalog(top),
        }
    return report
