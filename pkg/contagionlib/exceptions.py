from __future__ import annotations


class ContagionError(Exception):
    """Base class for every error raised by contagionlib."""


class GraphError(ContagionError):
    """A graph could not be built or does not satisfy an operation's precondition."""


class GraphParseError(GraphError):
    line: int | None

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidGraphSpecError(GraphError):
    """A named graph spec has an unknown family or bad parameters."""


class VertexRangeError(GraphError):
    def __init__(self, vertex: int, n: int) -> None:
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} out of range for graph with {n} vertices")


class DisconnectedGraphError(GraphError):
    measure: str

    def __init__(self, measure: str) -> None:
        self.measure = measure
        super().__init__(f"{measure} is undefined on a disconnected graph")


class InvalidParameterError(ContagionError):
    """A numeric parameter is outside its allowed range."""


class ConvergenceError(ContagionError):
    estimate: float
    residual: float
    iterations: int
    vertex: int | None

    def __init__(
        self, estimate: float, residual: float, iterations: int, vertex: int | None = None
    ) -> None:
        self.estimate = estimate
        self.residual = residual
        self.iterations = iterations
        self.vertex = vertex
        message = (
            f"power iteration did not converge after {iterations} iterations "
            f"(best estimate {estimate:.12g}, residual {residual:.3g})"
        )
        if vertex is not None:
            message += f" while evaluating G - {vertex}"
        super().__init__(message)

    def for_vertex(self, vertex: int) -> ConvergenceError:
        return ConvergenceError(self.estimate, self.residual, self.iterations, vertex)


class ThresholdUndefinedError(ContagionError):
    def __init__(self) -> None:
        super().__init__("threshold undefined (λ₁ = 0)")


class UndefinedCorrelationError(ContagionError):
    def __init__(self) -> None:
        super().__init__("undefined correlation: all values tied on one side")
