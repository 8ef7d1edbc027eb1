"""Filesystem writers for reports, graph files and DOT renderings."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Union

import pandas as pd

PathLike = Union[Path, str]


def write_csv(frame: pd.DataFrame, path: PathLike) -> None:
    """Write a DataFrame to CSV, creating parent folders when needed."""
    destination = Path(path)
    destination.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(destination, index=False)


def atomic_write_text(path: PathLike, text: str, encoding: str = "utf-8") -> None:
    """Write text through a temp file in the same directory, then replace.

    Readers never observe a half-written graph or report file.
    """
    destination = Path(path)
    destination.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=str(destination.parent), prefix=f".{destination.name}.")
    try:
        with os.fdopen(fd, "w", encoding=encoding) as fh:
            fh.write(text)
        os.replace(tmp_path, destination)
    finally:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)


def atomic_write_json(path: PathLike, obj: Any) -> None:
    """Atomically write a JSON-serializable object, pretty-printed."""
    atomic_write_text(path, json.dumps(obj, ensure_ascii=False, indent=2) + "\n")
