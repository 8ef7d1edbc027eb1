"""Pytest configuration for local package imports.

This prepends the repository `src` directory (and the repository root, for
the `pipelines` runners) to sys.path so tests can import the toolkit without
installing it into the environment.

Environment defaults are set before any src import so config.py resolves to a
scratch output root and single-worker searches. Values already present in the
environment take precedence via os.environ.setdefault().
"""

import os
import sys
import tempfile
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

os.environ.setdefault("HCORDIAL_OUTPUT_ROOT", str(Path(tempfile.gettempdir()) / "hcordial-tests"))
os.environ.setdefault("ORACLE_WORKERS", "1")
os.environ.setdefault("ORACLE_SPLIT_DEPTH", "3")
os.environ.setdefault("LOG_LEVEL", "WARNING")

from graphs import make_graph  # noqa: E402
from labeling import Labeling  # noqa: E402


@pytest.fixture
def k3():
    return make_graph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def c4():
    return make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path as a string."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def labeled():
    """Build a Labeling from (n, {edge: label})."""

    def _build(n: int, labels: dict) -> Labeling:
        return Labeling.from_edge_map(make_graph(n, list(labels)), labels)

    return _build
