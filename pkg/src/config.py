"""Configuration module for the H-cordial labeling toolkit.

Loads environment variables, defines report output paths, and exposes the
defaults used to partition oracle searches. Every value has a default so the
toolkit imports cleanly without a .env file. Configuration only changes
ambient behavior (logging, output location, work partitioning); it never
changes a mathematical result.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


def _optional_int(name: str) -> Optional[int]:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return None
    return int(raw)


# Report output root
# Catalog reports, DOT renderings and JSON bundles are written here
ROOT = Path(os.getenv("HCORDIAL_OUTPUT_ROOT", "out")).expanduser()

REPORTS_DIR = ROOT / "reports"  # catalog_report.csv and per-entry JSON
DOT_DIR = ROOT / "dot"  # DOT renderings of catalog labelings
GRAPHS_DIR = ROOT / "graphs"  # catalog graphs in edge-list / labeled format

# Oracle work partitioning
# Tasks are split on assignment prefixes of this many edges; the split depth
# is independent of the worker count so decisions and statistics do not
# depend on parallelism.
ORACLE_WORKERS = max(1, int(os.getenv("ORACLE_WORKERS", "1")))
ORACLE_SPLIT_DEPTH = max(0, int(os.getenv("ORACLE_SPLIT_DEPTH", "3")))

# Optional assignment cap applied when SearchConfig.budget is not given
ORACLE_BUDGET = _optional_int("ORACLE_BUDGET")

# Assignment cap for the catalog's H2 decision on the 14-edge triangle and
# quadrilateral graph (labels in ±1..±2)
HTCCNTR_BUDGET = int(os.getenv("HTCCNTR_BUDGET", "50000000"))

# Logging defaults for the runners
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
LOG_JSON = os.getenv("LOG_JSON", "").strip().lower() in {"1", "true", "yes", "on"}
LOG_FILE = os.getenv("LOG_FILE") or None


def ensure_dirs(*paths: Path) -> None:
    """Create directory structures for report outputs.

    Args:
        *paths: One or more Path objects to create
    """
    for path in paths:
        path.mkdir(parents=True, exist_ok=True)
