"""
Tests for field snapshots on disk.
"""

import csv

import numpy as np
import pytest

from mhdforms.exceptions import GridMismatchError
from mhdforms.spectral import TorusGrid, load_field, random_field, save_field, write_field_csv
from mhdforms.spectral.io import MAGIC

pytestmark = pytest.mark.unit


def test_snapshot_preserves_field(tmp_path, magnetic):
    path = save_field(tmp_path / "b.mhdf", magnetic)
    assert path.read_bytes()[:4] == MAGIC
    loaded = load_field(path)
    assert loaded.grade == 2
    assert loaded.grid.shape == magnetic.grid.shape
    np.testing.assert_allclose(loaded.to_physical(), magnetic.to_physical(), atol=1e-14)


def test_bad_magic_rejected(tmp_path, velocity):
    path = save_field(tmp_path / "u.mhdf", velocity)
    data = bytearray(path.read_bytes())
    data[:4] = b"XXXX"
    path.write_bytes(bytes(data))
    with pytest.raises(GridMismatchError):
        load_field(path)


def test_truncated_payload_rejected(tmp_path, velocity):
    path = save_field(tmp_path / "u.mhdf", velocity)
    path.write_bytes(path.read_bytes()[:-8])
    with pytest.raises(GridMismatchError):
        load_field(path)
    path.write_bytes(b"MHD")
    with pytest.raises(GridMismatchError):
        load_field(path)


def test_csv_snapshot_layout(tmp_path, rng):
    grid = TorusGrid(2, 4)
    field = random_field(grid, 1, rng, max_mode=1)
    path = write_field_csv(tmp_path / "u.csv", field)
    with path.open(newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["x1", "x2", "c1", "c2"]
    assert len(rows) == 1 + 16
    assert float(rows[1][0]) == 0.0


def test_csv_snapshot_refuses_large_grids(tmp_path):
    grid = TorusGrid(3, 64)
    field = random_field(grid, 0, np.random.default_rng(0), max_mode=1)
    with pytest.raises(GridMismatchError):
        write_field_csv(tmp_path / "big.csv", field)
