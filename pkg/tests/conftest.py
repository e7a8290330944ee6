"""
Global pytest configuration for mhdforms

This file provides shared fixtures and enforces Python version requirements.
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

import numpy as np
import pytest

from mhdforms.spectral.grid import TorusGrid
from mhdforms.spectral.probes import random_field

# Add tests directory to sys.path to support imports from test fixtures
_tests_dir = Path(__file__).parent
if str(_tests_dir) not in sys.path:
    sys.path.insert(0, str(_tests_dir))

_MIN_PY_VERSION = (3, 11)


def _verify_python_version() -> str:
    """Return the interpreter version string or exit if <3.11."""
    version_info = sys.version_info
    version_str = ".".join(map(str, version_info[:3]))
    if version_info < _MIN_PY_VERSION:
        pytest.exit(
            f"ERROR: pytest must run on Python 3.11+ (detected {version_str}).",
            returncode=1,
        )
    return version_str


def pytest_report_header(config: pytest.Config) -> str:
    version_str = _verify_python_version()
    return f"Python interpreter verified for pytest: {version_str}"


@pytest.fixture(scope="session", autouse=True)
def register_markers(pytestconfig: pytest.Config) -> None:
    """Register project markers to prevent unknown marker warnings."""
    markers = {
        "unit": "Unit tests that should execute quickly.",
        "integration": "Integration tests hitting multiple components.",
        "slow": "Acceptance-scale runs.",
    }
    for name, description in markers.items():
        pytestconfig.addinivalue_line("markers", f"{name}: {description}")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep MHDFORMS_* variables of the calling shell out of the tests."""
    for name in list(os.environ):
        if name.startswith("MHDFORMS_"):
            monkeypatch.delenv(name, raising=False)


@pytest.fixture
def isolated_cwd(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Run in an empty directory so no mhdforms.toml is picked up."""
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def grid3() -> TorusGrid:
    return TorusGrid(dimension=3, points=16)


@pytest.fixture(scope="session")
def grid3_coarse() -> TorusGrid:
    return TorusGrid(dimension=3, points=8)


@pytest.fixture(scope="session")
def grid4() -> TorusGrid:
    return TorusGrid(dimension=4, points=8)


@pytest.fixture
def velocity(grid3: TorusGrid, rng: np.random.Generator):
    return random_field(grid3, 1, rng)


@pytest.fixture
def magnetic(grid3: TorusGrid, rng: np.random.Generator):
    return random_field(grid3, 2, rng)
