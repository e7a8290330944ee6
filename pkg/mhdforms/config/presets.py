"""Catalogue of named initial-data presets."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, ValidationError

from mhdforms.config.errors import ConfigError
from mhdforms.solver.initial_data import FieldSpec

DEFAULT_PRESET_FILE = "presets.yml"


class Preset(BaseModel):
    """Velocity and magnetic builders of one named preset."""

    description: str = Field("", description="One-line summary")
    velocity: FieldSpec = Field(default_factory=FieldSpec)
    magnetic: FieldSpec = Field(default_factory=FieldSpec)


class PresetCatalog(BaseModel):
    """
    Named presets loaded from YAML.

    Example:
        >>> catalog = PresetCatalog.load_default()
        >>> catalog.get("zero").velocity.builder
        'zero'
    """

    presets: dict[str, Preset] = Field(default_factory=dict)

    @classmethod
    def from_yaml(cls, path: Path) -> "PresetCatalog":
        """
        Load a catalogue from a YAML file with a top-level ``presets`` mapping.

        Raises:
            ConfigError: if the file is missing or malformed
        """
        if not path.exists():
            raise ConfigError(f"Preset catalogue not found: {path}")
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
        try:
            return cls(presets=data.get("presets", {}))
        except ValidationError as exc:
            raise ConfigError(f"Invalid preset catalogue {path}: {exc}") from exc

    @classmethod
    def load_default(cls) -> "PresetCatalog":
        with resources.as_file(resources.files("mhdforms.config") / DEFAULT_PRESET_FILE) as path:
            return cls.from_yaml(path)

    def names(self) -> list[str]:
        return sorted(self.presets)

    def get(self, name: str) -> Preset:
        try:
            return self.presets[name]
        except KeyError:
            raise ConfigError(
                f"Unknown preset {name!r}; available: {', '.join(self.names())}"
            ) from None


__all__ = ["Preset", "PresetCatalog"]
