"""
CSV reports and run manifests.

Every CSV starts with a ``# schema: <name>/v<version>`` comment line,
followed by a header row. Floats are written with 17 significant digits,
so identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Sequence

from pydantic import BaseModel, Field

from mhdforms import __version__
from mhdforms.observability import get_logger

logger = get_logger(__name__)

MANIFEST_FILE = "manifest.json"


class CsvSchema(BaseModel):
    """Name, version and column list of one CSV report."""

    name: str
    version: int = 1
    columns: tuple[str, ...]

    @property
    def tag(self) -> str:
        return f"{self.name}/v{self.version}"


IDENTITY_SCHEMA = CsvSchema(
    name="identity_report",
    columns=("suite", "dimension", "degree", "trials", "failures", "max_terms", "max_defect", "passed"),
)
ITERATION_SCHEMA = CsvSchema(
    name="iteration_log",
    columns=("iteration", "distance", "ratio", "db_monitor", "dual_path_defect", "measured_constant"),
)
NORMS_SCHEMA = CsvSchema(
    name="critical_norms",
    columns=(
        "horizon",
        "velocity",
        "velocity_gradient",
        "magnetic",
        "magnetic_coderivative",
        "velocity_continuity",
        "magnetic_continuity",
        "total",
    ),
)
DB_MONITOR_SCHEMA = CsvSchema(name="db_monitor", columns=("node", "time", "db_sup"))
HORIZON_SCHEMA = CsvSchema(name="horizon_search", columns=("horizon", "data_norm", "target"))
CONSTANT_SCHEMA = CsvSchema(
    name="bilinear_constant", columns=("horizon", "width", "b1_ratio", "b2_ratio", "b3_ratio", "constant")
)
DECAY_SCHEMA = CsvSchema(
    name="decay",
    columns=("semigroup", "p", "alpha", "q", "time", "ratio", "derivative_ratio"),
)
SCALING_SCHEMA = CsvSchema(
    name="scaling_check",
    columns=("scale", "nonlinear", "time", "velocity_defect", "magnetic_defect"),
)


def format_value(value: Any) -> str:
    """Render one CSV cell; floats use repr-exact 17 significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_csv(path: Path, schema: CsvSchema, rows: Iterable[Sequence[Any]]) -> Path:
    """
    Write ``rows`` under ``schema`` to ``path``.

    Raises:
        ValueError: if a row does not match the column count
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    width = len(schema.columns)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(f"# schema: {schema.tag}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(schema.columns)
        for row in rows:
            if len(row) != width:
                raise ValueError(f"{schema.tag} expects {width} columns, got {len(row)}")
            writer.writerow([format_value(v) for v in row])
    logger.debug("csv_written", path=str(path), schema=schema.tag)
    return path


def canonical_json(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def blob_sha1(data: bytes) -> str:
    """Git-style object hash of ``data``."""
    return hashlib.sha1(b"blob %d\0" % len(data) + data).hexdigest()


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


class RunManifest(BaseModel):
    """
    Echo of the configuration that produced a set of artefacts.

    Two runs whose manifests agree on ``config_hash`` and ``seed`` write
    byte-identical CSVs.
    """

    command: str = Field(..., description="Subcommand name")
    version: str = Field(__version__, description="mhdforms version")
    run_id: str | None = Field(None, description="Run identifier bound into the logs")
    config: dict[str, Any] = Field(default_factory=dict, description="Resolved configuration")
    config_hash: str = Field("", description="Blob SHA-1 of the canonical config JSON")
    seed: int = Field(0, ge=0)
    started_at: str = Field(default_factory=_utc_now)
    finished_at: str | None = None
    exit_code: int | None = None
    artifacts: list[str] = Field(default_factory=list, description="Files written, relative to the output directory")

    @classmethod
    def start(cls, command: str, config: dict[str, Any], seed: int, run_id: str | None = None) -> "RunManifest":
        digest = blob_sha1(canonical_json(config).encode("utf-8"))
        return cls(command=command, run_id=run_id, config=config, config_hash=digest, seed=seed)

    def record(self, path: Path, root: Path) -> Path:
        try:
            name = str(path.relative_to(root))
        except ValueError:
            name = str(path)
        if name not in self.artifacts:
            self.artifacts.append(name)
        return path

    def finish(self, exit_code: int, root: Path) -> Path:
        """Stamp the end time and write ``manifest.json`` under ``root``."""
        self.finished_at = _utc_now()
        self.exit_code = exit_code
        root.mkdir(parents=True, exist_ok=True)
        path = root / MANIFEST_FILE
        path.write_text(self.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.info("manifest_written", path=str(path), exit_code=exit_code, artifacts=len(self.artifacts))
        return path


__all__ = [
    "CONSTANT_SCHEMA",
    "CsvSchema",
    "DB_MONITOR_SCHEMA",
    "DECAY_SCHEMA",
    "HORIZON_SCHEMA",
    "IDENTITY_SCHEMA",
    "ITERATION_SCHEMA",
    "MANIFEST_FILE",
    "NORMS_SCHEMA",
    "RunManifest",
    "SCALING_SCHEMA",
    "blob_sha1",
    "canonical_json",
    "format_value",
    "write_csv",
]
