"""Exception hierarchy shared by every module."""


class ShiftChainError(ValueError):
    """Base class for all errors raised by shiftchain_lab."""


class UniformityError(ShiftChainError):
    """Edges or hypergraphs of different uniformity were mixed."""


class MalformedEdge(ShiftChainError):
    def __init__(self, index: int, reason: str):
        self.index = index
        super().__init__(f"edge {index} is malformed: {reason}")


class DuplicateEdge(ShiftChainError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"edges {i} and {j} are identical")


class IncomparablePair(ShiftChainError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"edges {i} and {j} are incomparable")


class BoundViolation(ShiftChainError):
    def __init__(self, count: int, bound: int):
        self.count, self.bound = count, bound
        super().__init__(f"{count} edges exceed the shift-chain bound m(n-m)+1 = {bound}")


class SizeError(ShiftChainError):
    """A requested object is larger than a configured cap allows."""


class CapExceeded(SizeError):
    """A search or enumeration would exceed its configured cap."""


class ColoringError(ShiftChainError):
    """A coloring does not fit the hypergraph it is checked against."""


class AmbiguousVertex(ShiftChainError):
    def __init__(self, vertex: int, true_colors):
        self.vertex = vertex
        self.true_colors = tuple(true_colors)
        super().__init__(
            f"vertex {vertex} has {len(self.true_colors)} true color variables {self.true_colors}"
        )


class FormatError(ShiftChainError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoProperColoring(ShiftChainError):
    """Proper coloring is undefined or impossible, e.g. for 1-uniform edges."""
