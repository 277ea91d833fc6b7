# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Shared fixtures: isolated settings, named graphs, networkx bridge."""

from collections.abc import Iterator

import networkx as nx
import pytest

from src.config import get_settings
from src.services import sweep_service
from src.services.graph_core import Graph, from_networkx, to_networkx
from src.services.pattern_catalog import PatternId, PatternKind, named_graph


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--runslow", action="store_true", default=False, help="run slow sweeps")


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def isolated_settings(
    monkeypatch: pytest.MonkeyPatch, tmp_path_factory: pytest.TempPathFactory
) -> Iterator[None]:
    """Single worker, no progress bars, a profile path nobody else writes to."""
    profile = tmp_path_factory.mktemp("profile") / "lcx.yaml"
    monkeypatch.setenv("LCX_JOBS", "1")
    monkeypatch.setenv("LCX_PROGRESS", "false")
    monkeypatch.setenv("LCX_CONFIG_PATH", str(profile))
    monkeypatch.delenv("LCX_CACHE_DIR", raising=False)
    monkeypatch.delenv("LCX_OUTPUT_FORMAT", raising=False)
    get_settings.cache_clear()
    monkeypatch.setattr(sweep_service, "_sweep_service", None)
    yield
    get_settings.cache_clear()


def to_nx(g: Graph) -> nx.Graph:
    return to_networkx(g)


def from_nx(h: nx.Graph) -> Graph:
    return from_networkx(h)


@pytest.fixture
def k113() -> Graph:
    return named_graph(PatternId(PatternKind.K113))


@pytest.fixture
def x_graph() -> Graph:
    return named_graph(PatternId(PatternKind.X))


@pytest.fixture
def paw() -> Graph:
    return named_graph(PatternId(PatternKind.PAW))


@pytest.fixture
def octahedron() -> Graph:
    return named_graph(PatternId(PatternKind.OCTAHEDRON))


@pytest.fixture
def diamond() -> Graph:
    return named_graph(PatternId(PatternKind.DIAMOND))


@pytest.fixture
def k4() -> Graph:
    return named_graph(PatternId.complete(4))


@pytest.fixture
def wheel5() -> Graph:
    return named_graph(PatternId.wheel(5))
