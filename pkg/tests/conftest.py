"""Shared fixtures."""

from pathlib import Path

import pytest

from monocurve.utils.config import clear_settings_cache

DEMO_IDEAL = """\
# <x - y, z - t, y^2 - y*t>
vars 4
x1 - x2
x3 - x4
x2^2 - x2*x4
"""


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch, tmp_path):
    """Every test sees default settings, whatever the developer's environment holds."""
    for name in ("MONOCURVE_LOG_LEVEL", "MONOCURVE_COMPUTE_CHECK_INVARIANTS"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    clear_settings_cache()
    yield
    clear_settings_cache()


@pytest.fixture
def demo_ideal_file(tmp_path) -> Path:
    path = tmp_path / "demo.ideal"
    path.write_text(DEMO_IDEAL, encoding="utf-8")
    return path


@pytest.fixture
def path_graph_file(tmp_path) -> Path:
    path = tmp_path / "path.graph"
    path.write_text("graph 3\n1 2  # first edge\n2 3\n", encoding="utf-8")
    return path
