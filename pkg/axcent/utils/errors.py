"""
Exception hierarchy for axcent.

Every library error derives from AxcentError and carries the process exit
code the command-line front end reports for it.
"""

from typing import Any, Dict, List, Optional


class AxcentError(Exception):
    """Base class for all axcent errors."""

    exit_code: int = 2

    def context(self) -> Dict[str, Any]:
        """Structured fields for logging."""
        return {}


class UsageError(AxcentError):
    """Invalid invocation."""

    exit_code = 1


class ParameterError(UsageError):
    """A measure or search parameter is out of range."""


class UnknownMeasureError(UsageError):
    """Measure id not in the registry."""

    def __init__(self, measure: str):
        super().__init__(f"unknown measure id: {measure!r}")
        self.measure = measure

    def context(self) -> Dict[str, Any]:
        return {"measure": self.measure}


class GraphFormatError(AxcentError):
    """Malformed edge-list document."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line

    def context(self) -> Dict[str, Any]:
        return {"line": self.line}


class NodeRangeError(AxcentError):
    """Node id outside [0, n)."""

    def __init__(self, node: int, n: int):
        super().__init__(f"node {node} out of range for graph with {n} nodes")
        self.node = node
        self.n = n

    def context(self) -> Dict[str, Any]:
        return {"node": self.node, "n": self.n}


class BoundExceededError(AxcentError):
    """Input exceeds a safety cap (e.g. brute-force oracles)."""


class CorpusError(AxcentError):
    """Malformed corpus file."""

    def __init__(self, message: str, path: str, line: Optional[int] = None):
        where = path if line is None else f"{path}:{line}"
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line

    def context(self) -> Dict[str, Any]:
        return {"path": self.path, "line": self.line}


class ConvergenceError(AxcentError):
    """Iterative solver did not reach the tolerance."""

    exit_code = 3

    def __init__(self, message: str, iterations: int, residual: float):
        super().__init__(f"{message} after {iterations} iterations (residual {residual:.3e})")
        self.iterations = iterations
        self.residual = residual

    def context(self) -> Dict[str, Any]:
        return {"iterations": self.iterations, "residual": self.residual}


class DegenerateSpectrumError(AxcentError):
    """Power iteration collapsed to the zero vector."""

    exit_code = 3


class DivergenceError(AxcentError):
    """Katz attenuation factor too large for the series to converge."""

    exit_code = 3

    def __init__(self, beta: float, limit: float):
        super().__init__(f"attenuation factor {beta!r} is not below {limit!r}")
        self.beta = beta
        self.limit = limit

    def context(self) -> Dict[str, Any]:
        return {"beta": self.beta, "limit": self.limit}


class AxiomMismatchError(AxcentError):
    """Axiom verdicts differ from the expected matrix."""

    def __init__(self, mismatches: List[str]):
        super().__init__("axiom verdict mismatch:\n  " + "\n  ".join(mismatches))
        self.mismatches = mismatches

    def context(self) -> Dict[str, Any]:
        return {"mismatches": len(self.mismatches)}
