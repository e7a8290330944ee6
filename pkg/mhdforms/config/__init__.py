"""
Configuration loading for mhdforms.

Values are resolved with the following precedence:

1. Explicit overrides passed to `load_config` (the CLI flags)
2. Environment variables (e.g., MHDFORMS_GRID_POINTS)
3. The config file: `--config`, else MHDFORMS_CONFIG_FILE, else
   `mhdforms.toml` if present in the working directory
4. Built-in defaults

Config files are TOML or YAML, chosen by suffix. Unknown keys are rejected.
"""

from __future__ import annotations

import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from mhdforms.config.errors import ConfigError
from mhdforms.config.presets import Preset, PresetCatalog
from mhdforms.observability import LOG_FORMATS
from mhdforms.solver.config import SolverConfig

__all__ = [
    "ConfigError",
    "DecayConfig",
    "ENV_VARIABLES",
    "ExponentTriple",
    "IdentitiesConfig",
    "LoggingConfig",
    "MHDFormsConfig",
    "Preset",
    "PresetCatalog",
    "ScalingConfig",
    "load_config",
]


DEFAULT_CONFIG_FILE = Path("mhdforms.toml")
DEFAULT_OUTPUT_DIR = Path("mhdforms-output")

# environment variable -> dotted config key
ENV_VARIABLES: dict[str, str] = {
    "MHDFORMS_DIMENSION": "solver.dimension",
    "MHDFORMS_GRID_POINTS": "solver.grid_points",
    "MHDFORMS_PERIOD": "solver.period",
    "MHDFORMS_HORIZON": "solver.horizon",
    "MHDFORMS_MESH_NODES": "solver.mesh_nodes",
    "MHDFORMS_GRADING": "solver.grading",
    "MHDFORMS_TOLERANCE": "solver.tolerance",
    "MHDFORMS_MAX_ITERATIONS": "solver.max_iterations",
    "MHDFORMS_SEED": "solver.seed",
    "MHDFORMS_PRESET": "preset",
    "MHDFORMS_OUTPUT_DIR": "output_dir",
    "MHDFORMS_SMALLNESS": "smallness",
    "MHDFORMS_LOG_LEVEL": "logging.level",
    "MHDFORMS_LOG_FORMAT": "logging.format",
    "MHDFORMS_LOG_FILE": "logging.file",
}
ENV_BOOLEANS: dict[str, str] = {
    "MHDFORMS_NONLINEAR": "solver.nonlinear",
    "MHDFORMS_SEARCH_HORIZON": "search_horizon",
    "MHDFORMS_MEASURE_CONSTANT": "measure_constant",
}


class IdentitiesConfig(BaseModel):
    """Trial counts of the identity suites."""

    dimensions: list[int] = Field(default_factory=lambda: [3, 4, 5, 6])
    degree: int = Field(2, ge=0, le=4, description="Maximal polynomial degree")
    trials: int = Field(100, ge=0, description="Magic-formula trials per dimension")
    complex_trials: int = Field(200, ge=0, description="d²=0 and δ²=0 trials per dimension")
    dictionary_trials: int = Field(50, ge=0, description="Dimension-3 dictionary trials")
    leibniz_trials: int = Field(50, ge=0, description="Graded Leibniz rule trials per dimension")
    spectral_trials: int = Field(50, ge=0, description="Random torus field pairs")
    spectral_dimensions: list[int] = Field(default_factory=lambda: [3, 4])
    spectral_points: int = Field(16, ge=4, description="Grid points per axis of the spectral suites")

    model_config = ConfigDict(extra="forbid")

    @field_validator("dimensions", "spectral_dimensions")
    @classmethod
    def _dimension_range(cls, value: list[int]) -> list[int]:
        for n in value:
            if not 3 <= n <= 6:
                raise ValueError(f"identity dimensions must lie in 3..6, got {n}")
        return value


class ExponentTriple(BaseModel):
    """(p, α, q); p and q may be written in terms of n ("n", "2n", "2n/3")."""

    p: float | str = Field(..., description="Source integrability")
    alpha: float = Field(..., ge=0.0, le=1.0, description="Smoothing exponent")
    q: float | str = Field(..., description="Target integrability")

    model_config = ConfigDict(extra="forbid")


def _default_triples() -> list[ExponentTriple]:
    return [
        ExponentTriple(p="n", alpha=0.0, q="n"),
        ExponentTriple(p="n", alpha=0.5, q="2n"),
        ExponentTriple(p="2n/3", alpha=0.5, q="n"),
        ExponentTriple(p="2n/3", alpha=1.0, q="2n"),
    ]


class DecayConfig(BaseModel):
    """Decay-diagnostic probes and time grid."""

    triples: list[ExponentTriple] = Field(default_factory=_default_triples)
    semigroups: list[str] = Field(default_factory=lambda: ["heat", "stokes", "maxwell"])
    probe_width: float = Field(0.6, gt=0.0, description="Width of the Gaussian-bump probe")
    time_count: int = Field(25, ge=1)
    time_start: float = Field(1e-3, gt=0.0)
    time_stop: float = Field(1.0, gt=0.0)

    model_config = ConfigDict(extra="forbid")

    @field_validator("semigroups")
    @classmethod
    def _known_semigroups(cls, value: list[str]) -> list[str]:
        for name in value:
            if name not in {"heat", "stokes", "maxwell"}:
                raise ValueError(f"unknown semigroup {name!r}")
        return value


class ScalingConfig(BaseModel):
    """Scaling-covariance check settings."""

    lambdas: list[float] = Field(default_factory=lambda: [2.0])
    time: Optional[float] = Field(None, description="Comparison time (default: the horizon)")
    include_nonlinear: bool = Field(True, description="Run the full nonlinear solve as well")

    model_config = ConfigDict(extra="forbid")

    @field_validator("lambdas")
    @classmethod
    def _positive(cls, value: list[float]) -> list[float]:
        if any(not v > 0 for v in value):
            raise ValueError("scaling factors must be positive")
        return value


class LoggingConfig(BaseModel):
    """Logging level, renderer and optional file."""

    level: str = Field("INFO", description="Log level name")
    format: str = Field("console", description="console or json")
    file: Optional[Path] = Field(None, description="Rotating log file")

    model_config = ConfigDict(extra="forbid")

    @field_validator("format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in LOG_FORMATS:
            raise ValueError(f"log format must be one of {sorted(LOG_FORMATS)}")
        return value

    @field_validator("level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return value


class MHDFormsConfig(BaseModel):
    """Top-level configuration shared by every subcommand."""

    solver: SolverConfig = Field(default_factory=SolverConfig)
    identities: IdentitiesConfig = Field(default_factory=IdentitiesConfig)
    decay: DecayConfig = Field(default_factory=DecayConfig)
    scaling: ScalingConfig = Field(default_factory=ScalingConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    preset: str = Field("small-taylor-green", description="Initial-data preset name", min_length=1)
    output_dir: Path = Field(DEFAULT_OUTPUT_DIR, description="Directory for CSVs and manifest")
    search_horizon: bool = Field(True, description="Shrink T before solving")
    smallness: float = Field(0.1, gt=0.0, description="Target data norm of the horizon search")
    measure_constant: bool = Field(False, description="Measure C_T at T, T/2, T/4")
    initial_velocity: Optional[Path] = Field(None, description="Velocity snapshot overriding the preset")
    initial_magnetic: Optional[Path] = Field(None, description="Magnetic snapshot overriding the preset")

    model_config = ConfigDict(extra="forbid")

    @field_validator("output_dir", mode="before")
    @classmethod
    def _coerce_path(cls, value: Any) -> Path:
        return Path(value) if not isinstance(value, Path) else value


def load_config(
    config_path: Optional[Path | str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> MHDFormsConfig:
    """
    Load configuration from overrides/environment/file/defaults.

    Args:
        config_path: Optional explicit path to a TOML or YAML file.
        overrides: Dotted keys (e.g. ``"solver.grid_points"``) with values
            that win over every other source; None values are ignored.

    Returns:
        MHDFormsConfig populated with the resolved values.

    Raises:
        ConfigError: if the file is missing, unparsable or a value is invalid.
    """
    data = _load_file_data(config_path)
    for env_var, key in ENV_VARIABLES.items():
        value = os.getenv(env_var)
        if value is not None:
            _set_dotted(data, key, value)
    for env_var, key in ENV_BOOLEANS.items():
        if os.getenv(env_var) is not None:
            _set_dotted(data, key, _env_bool(env_var, False))
    for key, value in (overrides or {}).items():
        if value is not None:
            _set_dotted(data, key, value)
    try:
        return MHDFormsConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(f"Invalid configuration: {exc}") from exc


def _load_file_data(config_path: Optional[Path | str]) -> Dict[str, Any]:
    """Load data from a TOML or YAML file if one can be resolved."""
    resolved = _resolve_config_path(config_path)
    if resolved is None:
        return {}
    if not resolved.exists():
        raise ConfigError(f"Configuration file not found: {resolved}")
    suffix = resolved.suffix.lower()
    try:
        if suffix == ".toml":
            with resolved.open("rb") as fh:
                data = tomllib.load(fh)
        elif suffix in {".yml", ".yaml"}:
            with resolved.open("r") as fh:
                data = yaml.safe_load(fh) or {}
        else:
            raise ConfigError(f"Unsupported configuration format: {resolved}")
    except (tomllib.TOMLDecodeError, yaml.YAMLError) as exc:
        raise ConfigError(f"Cannot parse {resolved}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"Configuration root must be a table: {resolved}")
    return data


def _resolve_config_path(config_path: Optional[Path | str]) -> Optional[Path]:
    """Resolve configuration path with environment fallback."""
    if config_path:
        return Path(config_path)
    env_path = os.getenv("MHDFORMS_CONFIG_FILE")
    if env_path:
        return Path(env_path)
    return DEFAULT_CONFIG_FILE if DEFAULT_CONFIG_FILE.exists() else None


def _set_dotted(data: Dict[str, Any], key: str, value: Any) -> None:
    *parents, leaf = key.split(".")
    node = data
    for part in parents:
        child = node.setdefault(part, {})
        if not isinstance(child, dict):
            raise ConfigError(f"Configuration key {part!r} must be a table")
        node = child
    node[leaf] = value


def _env_bool(env_var: str, default: Any) -> bool:
    """Resolve boolean from environment with fallback."""
    value = os.getenv(env_var)
    if value is None:
        return bool(default)
    normalized = value.strip().lower()
    if normalized in {"1", "true", "yes", "on"}:
        return True
    if normalized in {"0", "false", "no", "off"}:
        return False
    raise ConfigError(f"Invalid boolean for {env_var}: {value}")
