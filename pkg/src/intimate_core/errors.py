"""Exception types raised across the package."""


class IntimateCoreError(Exception):
    """Base class for all package errors."""


class ParseError(IntimateCoreError, ValueError):
    def __init__(self, lineno, line, reason="malformed edge line"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class WeightError(IntimateCoreError, ValueError):
    def __init__(self, lineno, weight):
        self.lineno = lineno
        self.weight = weight
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{where}edge weight must be a finite positive real, got {weight!r}")


class FormatError(IntimateCoreError, ValueError):
    """Index file is not in the expected format."""


class UnknownNode(IntimateCoreError, KeyError):
    def __init__(self, node):
        self.node = node
        super().__init__(node)

    def __str__(self):
        return f"unknown node {self.node!r}"


class InfeasibleQuery(IntimateCoreError):
    """No connected k-core contains every query node."""

    reason = "infeasible"


class QueryNotInCore(InfeasibleQuery):
    reason = "query-not-in-core"

    def __init__(self, node, coreness, k):
        self.node = node
        self.coreness = coreness
        self.k = k
        super().__init__(f"query node {node} has coreness {coreness} < k={k}")


class Disconnected(InfeasibleQuery):
    reason = "disconnected"

    def __init__(self, u, v, k):
        self.u = u
        self.v = v
        self.k = k
        super().__init__(f"query nodes {u} and {v} lie in different components of the {k}-core")


class QuerySplit(InfeasibleQuery):
    reason = "query-split"


class DepthExceeded(IntimateCoreError):
    def __init__(self, max_depth):
        self.max_depth = max_depth
        super().__init__(f"no connected k-core found within {max_depth} expansion levels")


class InfeasibleInput(IntimateCoreError, ValueError):
    """Refinement input is not a connected k-core containing the query."""


class BudgetExceeded(IntimateCoreError, ValueError):
    def __init__(self, n, budget):
        self.n = n
        self.budget = budget
        super().__init__(f"graph has {n} nodes; brute force is limited to {budget}")
