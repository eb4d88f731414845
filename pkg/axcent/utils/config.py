"""
Configuration loading for axcent.

Defaults ship in ``axcent/ops/config.yaml``. A ``.env`` file and the
``AXCENT_CONFIG``, ``AXCENT_LOG_LEVEL`` and ``AXCENT_THREADS`` environment
variables override them.
"""

import os
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Union

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from .errors import ParameterError


class LoggingConfig(BaseModel):
    level: str = "INFO"
    format: str = "console"
    file: Optional[str] = None

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        if v.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {v!r}")
        return v.upper()

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        if v not in ("console", "json"):
            raise ValueError("logging.format must be 'console' or 'json'")
        return v


class ComputeConfig(BaseModel):
    threads: int = Field(default=1, ge=1)
    sweep_chunk: int = Field(default=256, ge=1)
    max_nodes: int = Field(default=10_000_000, ge=1, le=1 << 31)


class SweepConfig(BaseModel):
    alphas: List[float] = [0.25, 0.5, 0.75]
    beta_factors: List[float] = [0.25, 0.5, 0.75]


class SpectralConfig(BaseModel):
    tol: float = Field(default=1e-12, gt=0.0)
    max_iters: int = Field(default=1_000_000, ge=1)
    alpha: float = Field(default=0.5, ge=0.0, lt=1.0)
    beta_factor: float = Field(default=0.5, gt=0.0, lt=1.0)
    katz_margin: float = Field(default=1e-6, ge=0.0, lt=1.0)
    sweep: SweepConfig = SweepConfig()


class SearchBound(BaseModel):
    p: int = Field(default=10_000, ge=3)
    k: int = Field(default=1_000, ge=3)


class SizeAxiomConfig(BaseModel):
    k_sample: List[int] = [3, 4, 5, 6, 7, 8]
    p_sample: List[int] = [3, 4, 5, 6, 7, 8]
    bounds: Dict[str, SearchBound] = {"default": SearchBound()}

    def bound_for(self, measure: str) -> SearchBound:
        """Search bound for a measure id, falling back to the default entry."""
        return self.bounds.get(measure, self.bounds.get("default", SearchBound()))


class DensityAxiomConfig(BaseModel):
    k_sample: List[int] = [3, 4, 5, 6, 7, 8]


class MonotonicityConfig(BaseModel):
    trials: int = Field(default=300, ge=0)
    max_nodes: int = Field(default=40, ge=2)
    seed: int = 0


class WatershedConfig(BaseModel):
    k_max: int = Field(default=256, ge=3)


class AxiomConfig(BaseModel):
    tie_tolerance: float = Field(default=1e-9, ge=0.0)
    size: SizeAxiomConfig = SizeAxiomConfig()
    density: DensityAxiomConfig = DensityAxiomConfig()
    monotonicity: MonotonicityConfig = MonotonicityConfig()
    watershed: WatershedConfig = WatershedConfig()


class RetrievalConfig(BaseModel):
    cutoff: int = Field(default=10, ge=1)


class AppConfig(BaseModel):
    """Top-level configuration document."""

    logging: LoggingConfig = LoggingConfig()
    compute: ComputeConfig = ComputeConfig()
    spectral: SpectralConfig = SpectralConfig()
    axioms: AxiomConfig = AxiomConfig()
    retrieval: RetrievalConfig = RetrievalConfig()


def _default_config_text() -> str:
    return resources.files("axcent.ops").joinpath("config.yaml").read_text(encoding="utf-8")


def load_config(path: Optional[Union[str, Path]] = None) -> AppConfig:
    """
    Load configuration.

    Args:
        path: Explicit YAML file; otherwise ``AXCENT_CONFIG`` or the packaged defaults

    Returns:
        Validated configuration
    """
    load_dotenv()

    if path is None:
        path = os.environ.get("AXCENT_CONFIG")

    if path is None:
        raw = yaml.safe_load(_default_config_text()) or {}
    else:
        try:
            raw = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
        except OSError as e:
            raise ParameterError(f"cannot read config file {path}: {e}") from e

    if "AXCENT_LOG_LEVEL" in os.environ:
        raw.setdefault("logging", {})["level"] = os.environ["AXCENT_LOG_LEVEL"]
    if "AXCENT_THREADS" in os.environ:
        raw.setdefault("compute", {})["threads"] = os.environ["AXCENT_THREADS"]

    try:
        return AppConfig.model_validate(raw)
    except ValidationError as e:
        raise ParameterError(f"invalid configuration: {e}") from e
