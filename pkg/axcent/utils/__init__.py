"""
Shared utilities: logging, configuration, errors, output and parallel helpers.
"""

from .config import AppConfig, load_config
from .errors import (
    AxcentError,
    AxiomMismatchError,
    BoundExceededError,
    ConvergenceError,
    CorpusError,
    DegenerateSpectrumError,
    DivergenceError,
    GraphFormatError,
    NodeRangeError,
    ParameterError,
    UnknownMeasureError,
    UsageError,
)
from .logging import get_logger, setup_logging

__all__ = [
    "AppConfig",
    "load_config",
    "AxcentError",
    "AxiomMismatchError",
    "BoundExceededError",
    "ConvergenceError",
    "CorpusError",
    "DegenerateSpectrumError",
    "DivergenceError",
    "GraphFormatError",
    "NodeRangeError",
    "ParameterError",
    "UnknownMeasureError",
    "UsageError",
    "get_logger",
    "setup_logging",
]
