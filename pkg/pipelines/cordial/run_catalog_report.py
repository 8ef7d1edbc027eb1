"""Catalog report pipeline.

Evaluates every catalog claim and writes, under HCORDIAL_OUTPUT_ROOT:
    reports/catalog_report.csv     one row per (entry, claim)
    reports/<entry>.json           per-entry claim bundle
    graphs/<entry>.txt             entry graph in (labeled-)graph format
    dot/<entry>.dot                DOT rendering of each published labeling
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

# Add src directory to Python path
ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "src"))

import pandas as pd

import catalog
import config
from loaders.filesystem import atomic_write_json, atomic_write_text, write_csv
from logging_config import get_logger, log_run_end, log_run_start, setup_logging

logger = get_logger("catalog.report")


def run_report(output_root: Optional[Path] = None, budget: Optional[int] = None) -> bool:
    """Check every entry and write the report files; True when all claims pass."""
    if output_root is None:
        reports_dir, dot_dir, graphs_dir = config.REPORTS_DIR, config.DOT_DIR, config.GRAPHS_DIR
    else:
        root = Path(output_root)
        reports_dir, dot_dir, graphs_dir = root / "reports", root / "dot", root / "graphs"
    config.ensure_dirs(reports_dir, dot_dir, graphs_dir)

    reports = catalog.check_all(catalog.CheckOptions(budget=budget))
    write_csv(pd.concat([r.to_frame() for r in reports], ignore_index=True), reports_dir / "catalog_report.csv")
    for report in reports:
        entry = catalog.get_entry(report.entry)
        atomic_write_json(reports_dir / f"{entry.name}.json", report.to_dict())
        atomic_write_text(graphs_dir / f"{entry.name}.txt", entry.to_text())
        dot = entry.to_dot()
        if dot is not None:
            atomic_write_text(dot_dir / f"{entry.name}.dot", dot)
        logger.info(f"{entry.name}: {'pass' if report.passed else 'FAIL'}")

    failed = [r.entry for r in reports if not r.passed]
    if failed:
        logger.error(f"catalog claims failed for: {', '.join(failed)}")
    return not failed


def main() -> None:
    parser = argparse.ArgumentParser(description="Check every catalog entry and write report files")
    parser.add_argument("--out", type=Path, help="output root (defaults to HCORDIAL_OUTPUT_ROOT)")
    parser.add_argument("--budget", type=int, help="node budget for oracle-backed claims")
    args = parser.parse_args()

    setup_logging(level="INFO", log_file=config.LOG_FILE, json_format=config.LOG_JSON)
    log_run_start("catalog-report")
    ok = run_report(args.out, args.budget)
    log_run_end("catalog-report", exit_status=0 if ok else 1)
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
