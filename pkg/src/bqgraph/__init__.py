"""Boundary quotients, CT-decompositions and exact indices of small directed multigraphs."""

from .admissible import AdmissibleBoundary, admissible_boundary, admissible_quotient
from .classify import (
    TRIVIAL,
    TREE,
    Circulant,
    Component,
    Decomposition,
    LoopGraph,
    TypeTag,
    classify_type,
    ct_decompose,
    is_growing_tree,
    is_mixed_maximal_type,
)
from .errors import (
    GraphError,
    InvalidName,
    DuplicateVertex,
    DuplicateEdgeId,
    DanglingEndpoint,
    UnknownVertex,
    EmptySubgraph,
    NameCollision,
    GraphSyntaxError,
    SchemaError,
    SizeLimit,
    NotSimplicial,
    NotConnected,
    NotCTDecomposable,
    InvalidChain,
    InternalMismatch,
    Unsatisfiable,
)
from .graph import (
    DirectedMultigraph,
    Edge,
    FullSubgraphSpec,
    build_graph,
    has_directed_path,
    induced_full_subgraph,
    is_connected,
    is_simplicial,
    size,
    trivial_graph,
)
from .index import (
    ONE,
    ZERO,
    Chain,
    Exp,
    LogIndex,
    dual_chain,
    ind_between,
    ind_subgraph,
    ind_trivial,
    index_range,
    verify_chain,
    verify_dual_chain,
)
from .io import emit_dot, emit_json_graph, load_graph, parse_dot_subset, parse_json_graph, save_graph
from .iso import are_isomorphic, canonical_form, find_induced_embedding
from .quotient import GlueSpec, QuotientResult, boundary_quotient, glue, iterated_glue, subgraph_boundary_quotient

__version__ = "0.1.0"

__all__ = [
    "AdmissibleBoundary",
    "admissible_boundary",
    "admissible_quotient",
    "TRIVIAL",
    "TREE",
    "Circulant",
    "Component",
    "Decomposition",
    "LoopGraph",
    "TypeTag",
    "classify_type",
    "ct_decompose",
    "is_growing_tree",
    "is_mixed_maximal_type",
    "DirectedMultigraph",
    "Edge",
    "FullSubgraphSpec",
    "build_graph",
    "has_directed_path",
    "induced_full_subgraph",
    "is_connected",
    "is_simplicial",
    "size",
    "trivial_graph",
    "ONE",
    "ZERO",
    "Chain",
    "Exp",
    "LogIndex",
    "dual_chain",
    "ind_between",
    "ind_subgraph",
    "ind_trivial",
    "index_range",
    "verify_chain",
    "verify_dual_chain",
    "emit_dot",
    "emit_json_graph",
    "load_graph",
    "parse_dot_subset",
    "parse_json_graph",
    "save_graph",
    "are_isomorphic",
    "canonical_form",
    "find_induced_embedding",
    "GlueSpec",
    "QuotientResult",
    "boundary_quotient",
    "glue",
    "iterated_glue",
    "subgraph_boundary_quotient",
    "GraphError",
    "InvalidName",
    "DuplicateVertex",
    "DuplicateEdgeId",
    "DanglingEndpoint",
    "UnknownVertex",
    "EmptySubgraph",
    "NameCollision",
    "GraphSyntaxError",
    "SchemaError",
    "SizeLimit",
    "NotSimplicial",
    "NotConnected",
    "NotCTDecomposable",
    "InvalidChain",
    "InternalMismatch",
    "Unsatisfiable",
]

