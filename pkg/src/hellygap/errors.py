"""Exception types. Each carries a machine-readable ``kind``."""


class HellyGapError(Exception):
    kind = "error"

    def __init__(self, message, kind=None):
        super().__init__(message)
        if kind is not None:
            self.kind = kind


class GraphError(HellyGapError, ValueError):
    """Invalid graph, vertex, or vertex set."""


class ParseError(GraphError):
    """Malformed edge-list text; ``line`` is 1-based (0 when not line-specific)."""

    def __init__(self, message, line=0, kind="parse"):
        super().__init__(f"line {line}: {message}" if line else message, kind=kind)
        self.line = line


class HullGuardError(HellyGapError, RuntimeError):
    kind = "guard"

    def __init__(self, guard, partial_count):
        super().__init__(
            f"hull size guard exceeded: more than {guard} extremal functions "
            f"(stopped after {partial_count})"
        )
        self.guard = guard
        self.partial_count = partial_count


class OracleBudgetError(HellyGapError, RuntimeError):
    kind = "oracle_budget"
