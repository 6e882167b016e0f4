"""Exception classes shared across the package."""


class GraphError(ValueError):
    pass


class OrderTooLarge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


class BadParams(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class Graph6Error(GraphError):
    pass


class BadChar(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class NonzeroPadding(Graph6Error):
    pass


class ParseError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class OrderTooLargeForOracle(GraphError):
    pass


class InfeasibleDegree(GraphError):
    pass


class RetriesExhausted(RuntimeError):
    pass


class FuelExhausted(RuntimeError):
    """The greedy partition ran past its step allowance."""


class ClaimViolated(AssertionError):
    def __init__(self, vertex: int, part: int, earlier: int, message: str):
        super().__init__(message)
        self.vertex = vertex
        self.part = part
        self.earlier = earlier


class ConstructionNotRegular(AssertionError):
    pass
