"""Field snapshots on disk.

Binary layout (little endian)::

    b"MHDF"                       magic
    int32 n, int32 N, int32 grade
    float64 L
    float64[C(n, grade), N, ..., N]  physical grid values, row-major per blade

CSV snapshots carry one row per grid point with the coordinates followed by
one column per blade and are meant for small grids only.
"""

from __future__ import annotations

import csv
import struct
from pathlib import Path

import numpy as np

from mhdforms.exceptions import GridMismatchError
from mhdforms.observability import get_logger
from mhdforms.spectral.field import SpectralFormField
from mhdforms.spectral.grid import TorusGrid

logger = get_logger(__name__)

MAGIC = b"MHDF"
_HEADER = struct.Struct("<4siiid")
CSV_MAX_POINTS = 1 << 16


def save_field(path: str | Path, field: SpectralFormField) -> Path:
    path = Path(path)
    grid = field.grid
    header = _HEADER.pack(MAGIC, grid.dimension, grid.points, field.grade, grid.period)
    values = np.ascontiguousarray(field.to_physical(), dtype="<f8")
    with path.open("wb") as handle:
        handle.write(header)
        handle.write(values.tobytes(order="C"))
    logger.debug("field_saved", path=str(path), grade=field.grade, points=grid.points)
    return path


def load_field(path: str | Path) -> SpectralFormField:
    """Read a snapshot written by :func:`save_field`.

    Raises:
        GridMismatchError: on a bad magic number or a truncated payload
    """
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise GridMismatchError("field file too short", expected=_HEADER.size, actual=len(data))
    magic, dimension, points, grade, period = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise GridMismatchError("not a field snapshot", expected=MAGIC, actual=magic)
    grid = TorusGrid(dimension, points, period)
    count = len(SpectralFormField.zeros(grid, grade).blades)
    shape = (count,) + grid.shape
    payload = np.frombuffer(data, dtype="<f8", offset=_HEADER.size)
    if payload.size != int(np.prod(shape)):
        raise GridMismatchError(
            "field payload does not match its header", expected=shape, actual=payload.size
        )
    return SpectralFormField.from_physical(grid, grade, payload.reshape(shape))


def write_field_csv(path: str | Path, field: SpectralFormField) -> Path:
    path = Path(path)
    grid = field.grid
    total = grid.points**grid.dimension
    if total > CSV_MAX_POINTS:
        raise GridMismatchError(
            "grid too large for a CSV snapshot", expected=f"<= {CSV_MAX_POINTS}", actual=total
        )
    values = field.to_physical().reshape(len(field.blades), -1)
    coordinates = [x.reshape(-1) for x in grid.mesh()]
    header = [f"x{i}" for i in range(1, grid.dimension + 1)]
    header += [f"c{''.join(str(i) for i in blade.indices)}" if blade.indices else "c" for blade in field.blades]
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for point in range(total):
            row = [format(x[point], ".17g") for x in coordinates]
            row += [format(v, ".17g") for v in values[:, point]]
            writer.writerow(row)
    return path


__all__ = ["MAGIC", "load_field", "save_field", "write_field_csv"]
