"""Exact subgraph boundary indices.

An index is e**k for an integer k >= 0, or zero. Values are kept as the
integer exponent so every identity among indices is checked as integer
arithmetic; ``to_float`` exists only for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import total_ordering
from itertools import combinations
from typing import Optional

from .errors import InternalMismatch, InvalidChain, SizeLimit
from .graph import DirectedMultigraph, as_vertex_set, induced_full_subgraph, size
from .iso import find_induced_embedding
from .quotient import QuotientResult, subgraph_boundary_quotient


@total_ordering
@dataclass(frozen=True)
class LogIndex:
    """``Exp(k)`` when ``log`` is an int, ``Zero`` when it is None."""

    log: Optional[int] = None

    @property
    def is_zero(self):
        return self.log is None

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return ZERO
        return Exp(self.log + other.log)

    def __truediv__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("division by the zero index")
        if self.is_zero:
            return ZERO
        return Exp(self.log - other.log)

    def __lt__(self, other):
        # zero sorts below every exponential
        a = -math.inf if self.log is None else self.log
        b = -math.inf if other.log is None else other.log
        return a < b

    def __str__(self):
        return "0" if self.is_zero else f"e^{self.log} (log={self.log})"


ZERO = LogIndex(None)
ONE = LogIndex(0)


def Exp(k: int) -> LogIndex:
    return LogIndex(int(k))


def product(indices) -> LogIndex:
    acc = ONE
    for x in indices:
        acc = acc * x
    return acc


def to_float(x: LogIndex) -> float:
    if x.is_zero:
        return 0.0
    if x.log > 700:
        raise OverflowError(f"e^{x.log} does not fit in a double")
    return math.exp(x.log)


def ind_trivial(g: DirectedMultigraph) -> LogIndex:
    """Index of the one-vertex subgraph: e**(|G| - 1)."""
    return Exp(size(g) - 1)


def ind_subgraph(g: DirectedMultigraph, h, quotient=subgraph_boundary_quotient) -> LogIndex:
    """Ind_G(H) = e**(|G| - |H|), cross-checked against |G/H| - 1."""
    sub = induced_full_subgraph(g, h)
    closed = size(g) - size(sub)
    via_quotient = size(quotient(g, as_vertex_set(h)).graph) - 1
    if closed != via_quotient:
        raise InternalMismatch(
            f"|G|-|H| = {closed} but |G/H|-1 = {via_quotient} for H = {sorted(as_vertex_set(h))}"
        )
    return Exp(closed)


def ind_between(g1: DirectedMultigraph, g2: DirectedMultigraph, force: bool = False) -> LogIndex:
    """Index of g1 in g2 through an induced embedding, or zero if none exists."""
    mapping = find_induced_embedding(g1, g2, force=force)
    if mapping is None:
        return ZERO
    image = set(mapping.vertex_map.values())
    value = ind_subgraph(g2, image)
    if value.log != size(g2) - size(g1):
        raise InternalMismatch("embedded image differs in size from the pattern graph")
    return value


def all_full_subgraphs(g: DirectedMultigraph):
    """Every nonempty vertex subset of ``g``, as frozensets."""
    vs = g.vertices
    for k in range(1, len(vs) + 1):
        for combo in combinations(vs, k):
            yield frozenset(combo)


def index_range(g: DirectedMultigraph, max_size: int = 14) -> list[LogIndex]:
    """Sorted set of Ind_G(H) over all full subgraphs H."""
    if size(g) > max_size:
        raise SizeLimit(f"index_range enumerates every subgraph; |G| = {size(g)} exceeds {max_size}")
    values = sorted({ind_subgraph(g, h) for h in all_full_subgraphs(g)})
    allowed = {Exp(size(g) - k) for k in range(1, size(g) + 1)}
    stray = [v for v in values if v not in allowed]
    if stray:
        raise InternalMismatch(f"indices outside the admissible range: {', '.join(map(str, stray))}")
    return values


# -- chains --------------------------------------------------------------------

@dataclass(frozen=True)
class Chain:
    """Nested vertex sets K_1 <= ... <= K_n, innermost first."""

    levels: tuple[frozenset, ...]

    def __init__(self, levels):
        object.__setattr__(self, "levels", tuple(frozenset(x) for x in levels))

    def __len__(self):
        return len(self.levels)


def validate_chain(g: DirectedMultigraph, chain: Chain) -> None:
    if not chain.levels:
        raise InvalidChain("a chain needs at least one level")
    for i, level in enumerate(chain.levels):
        if not level:
            raise InvalidChain(f"level {i + 1} is empty")
        missing = sorted(level - set(g.vertices))
        if missing:
            raise InvalidChain(f"level {i + 1} names unknown vertices {missing}")
        if i and not chain.levels[i - 1] <= level:
            raise InvalidChain(f"level {i} is not contained in level {i + 1}")


@dataclass
class ChainReport:
    levels: list[list[str]]
    # (i, j) -> Ind_{K_j}(K_i), i < j, with K_{n+1} = G
    pairwise: dict[tuple[int, int], LogIndex] = field(default_factory=dict)
    direct: LogIndex = ONE
    telescoped: LogIndex = ONE
    chain_rule_failures: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.direct == self.telescoped and not self.chain_rule_failures

    def to_json(self):
        return {
            "levels": self.levels,
            "pairwise": [{"inner": i + 1, "outer": j + 1, "index": str(v), "log": v.log}
                         for (i, j), v in sorted(self.pairwise.items())],
            "direct": self.direct.log,
            "telescoped": self.telescoped.log,
            "chain_rule_failures": [list(t) for t in self.chain_rule_failures],
            "passed": self.passed,
        }


def _levels_with_host(g, chain):
    return list(chain.levels) + [frozenset(g.vertices)]


def verify_chain(g: DirectedMultigraph, chain: Chain) -> ChainReport:
    """Check the chain rule for every triple and the telescoping product."""
    validate_chain(g, chain)
    levels = _levels_with_host(g, chain)
    subs = [induced_full_subgraph(g, lv) for lv in levels]
    rep = ChainReport([sorted(lv) for lv in levels])
    n = len(levels)
    for i in range(n):
        for j in range(i + 1, n):
            rep.pairwise[(i, j)] = ind_subgraph(subs[j], levels[i])
    rep.direct = rep.pairwise[(0, n - 1)] if n > 1 else ONE
    rep.telescoped = product(rep.pairwise[(j - 1, j)] for j in range(1, n))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if rep.pairwise[(i, k)] != rep.pairwise[(j, k)] * rep.pairwise[(i, j)]:
                    rep.chain_rule_failures.append((i + 1, j + 1, k + 1))
    return rep


def dual_chain(g: DirectedMultigraph, chain: Chain) -> list[QuotientResult]:
    """Quotients G/K_n, ..., G/K_1 (outermost level first)."""
    validate_chain(g, chain)
    return [subgraph_boundary_quotient(g, lv) for lv in reversed(chain.levels)]


@dataclass
class DualStep:
    inner: int  # chain level i (1-based); its quotient is the larger graph
    outer: int  # chain level j > i; its quotient should sit inside G/K_i
    embedded: bool
    inter_graph_index: LogIndex  # Ind_{G/K_i}(G/K_j) through an embedding, zero if none
    size_ratio: LogIndex  # Ind_{G/K_i}(1) / Ind_{G/K_j}(1)
    expected: LogIndex  # Ind_{K_j}(K_i)

    @property
    def duality_holds(self) -> bool:
        return self.size_ratio == self.expected

    def to_json(self):
        return {"inner": self.inner, "outer": self.outer, "embedded": self.embedded,
                "inter_graph_index": self.inter_graph_index.log, "size_ratio": self.size_ratio.log,
                "expected": self.expected.log, "duality_holds": self.duality_holds}


def verify_dual_chain(g: DirectedMultigraph, chain: Chain, force: bool = False) -> list[DualStep]:
    """Check every pair i < j of the dual chain.

    ``embedded`` records whether G/K_j has an induced embedding into
    G/K_i; ``duality_holds`` compares the log-domain ratio of the two
    quotients' trivial indices with Ind_{K_j}(K_i).
    """
    validate_chain(g, chain)
    levels = chain.levels
    quots = [subgraph_boundary_quotient(g, lv).graph for lv in levels]
    subs = [induced_full_subgraph(g, lv) for lv in levels]
    steps = []
    for i in range(len(levels)):
        for j in range(i + 1, len(levels)):
            between = ind_between(quots[j], quots[i], force=force)
            steps.append(DualStep(
                inner=i + 1,
                outer=j + 1,
                embedded=not between.is_zero,
                inter_graph_index=between,
                size_ratio=ind_trivial(quots[i]) / ind_trivial(quots[j]),
                expected=ind_subgraph(subs[j], levels[i]),
            ))
    return steps
