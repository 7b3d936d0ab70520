"""Exception hierarchy shared by every module of the package."""


class CactusResError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CactusResError, ValueError):
    """Malformed edge-list input. ``line`` is the 1-based line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class MalformedLineError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class EdgeCountError(ParseError):
    pass


class GraphError(CactusResError, ValueError):
    """Invalid graph construction or a bad vertex argument."""


class StructuralError(CactusResError, ValueError):
    """The graph lacks a structural property an operation requires."""


class NotBalancedError(StructuralError):
    def __init__(self, vertex, indegree, outdegree):
        self.vertex = vertex
        super().__init__(
            f"vertex {vertex} is not balanced (indegree {indegree}, outdegree {outdegree})"
        )


class NotStronglyConnectedError(StructuralError):
    def __init__(self, source, target):
        self.pair = (source, target)
        super().__init__(f"no directed path from {source} to {target}")


class DimensionError(CactusResError, ValueError):
    pass


class SingularMatrixError(CactusResError, ArithmeticError):
    def __init__(self, message="matrix is singular", det=0):
        self.det = det
        super().__init__(f"{message} (det = {det})")


class PreconditionError(CactusResError, ValueError):
    pass


class SizeGuardError(CactusResError, ValueError):
    pass


class IdentityMismatchError(CactusResError, AssertionError):
    """An internal self-check between two independent routes disagreed."""
