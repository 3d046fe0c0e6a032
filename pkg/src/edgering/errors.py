"""Exception hierarchy shared by all edgering modules."""


class EdgeringError(Exception):
    """Base class for every error raised by this package."""


class ParseError(EdgeringError):
    """Malformed graph or monomial input.

    ``line`` is the 1-based input line, or ``None`` when the error is not
    tied to a single line.
    """

    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UnsupportedGeneratorError(ParseError):
    """A monomial that is not of quadratic shape."""


class StructuralError(EdgeringError):
    """An edge reference or vertex that does not belong to the graph."""


class DomainError(EdgeringError):
    """An operation was applied outside the kind of graph it is defined on."""


class PreconditionError(EdgeringError):
    """Inputs violate a documented precondition (e.g. cycles not disjoint)."""


class CapacityError(EdgeringError):
    """An enumeration exceeded its configured cap."""

    def __init__(self, message: str, flag: str):
        self.flag = flag
        super().__init__(f"{message} (raise {flag})")


class NotInSubringError(EdgeringError):
    """Exponent vector has a nonzero artificial coordinate."""


class InconsistentWeightsError(EdgeringError):
    """Weights on the two halves of an augmented directed edge differ."""


class ConditionViolatedError(EdgeringError):
    """Vertex sums of an integer weighting are not all zero."""

    def __init__(self, vertex: int, total: int):
        self.vertex = vertex
        self.total = total
        super().__init__(f"vertex {vertex + 1} has weighted sign sum {total} != 0")
