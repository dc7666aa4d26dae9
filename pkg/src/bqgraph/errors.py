"""Exception hierarchy shared by every module."""


class GraphError(Exception):
    """Base class for all bqgraph errors."""


class InvalidName(GraphError):
    pass


class DuplicateVertex(GraphError):
    pass


class DuplicateEdgeId(GraphError):
    pass


class DanglingEndpoint(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class EmptySubgraph(GraphError):
    pass


class NameCollision(GraphError):
    pass


class GraphSyntaxError(GraphError):
    """Malformed input text. ``line`` and ``col`` are 1-based."""

    def __init__(self, message, line=None, col=None, pos=None):
        self.line = line
        self.col = col
        self.pos = pos
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class SchemaError(GraphError):
    pass


class SizeLimit(GraphError):
    pass


class NotSimplicial(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotCTDecomposable(GraphError):
    """Raised with the offending biconnected block attached."""

    def __init__(self, block_vertices, block_edges):
        self.block_vertices = tuple(block_vertices)
        self.block_edges = tuple(block_edges)
        super().__init__(
            "block on vertices {%s} (edges %s) is neither a coherent directed cycle nor a bridge"
            % (", ".join(self.block_vertices), ", ".join(self.block_edges))
        )


class InvalidChain(GraphError):
    pass


class InternalMismatch(GraphError):
    pass


class Unsatisfiable(GraphError):
    pass
