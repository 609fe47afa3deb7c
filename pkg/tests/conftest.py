"""Shared fixtures: bundled graphs, built once per session."""

from pathlib import Path

import pytest

from src.cli.fixtures import load_fixture
from src.gkm.connection import ensure_connection
from src.gkm.model import GKMGraph

FIXTURES_DIR = Path(__file__).resolve().parents[1] / "fixtures"


def _connected(name: str, strict: bool = True) -> GKMGraph:
    return ensure_connection(load_fixture(name, strict=strict))


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def octahedron() -> GKMGraph:
    return _connected("octahedron")


@pytest.fixture(scope="session")
def cube3p() -> GKMGraph:
    return _connected("cube3-projected")


@pytest.fixture(scope="session")
def cube3() -> GKMGraph:
    return _connected("cube3")


@pytest.fixture(scope="session")
def single_edge() -> GKMGraph:
    return _connected("single-edge")


@pytest.fixture(scope="session")
def hp2() -> GKMGraph:
    return _connected("hp2", strict=False)


@pytest.fixture(scope="session")
def cp3() -> GKMGraph:
    return _connected("cp3")


@pytest.fixture
def graph_named():
    """Return a loader for any fixture by name, with its connection."""
    return _connected
