"""Transcribed counterexample graphs with machine-checked claims."""

from .claims import (
    CatalogEntry,
    CatalogReport,
    CheckOptions,
    Claim,
    ClaimResult,
    check,
    check_all,
    entries,
    get_entry,
    names,
)

__all__ = [
    "CatalogEntry",
    "CatalogReport",
    "CheckOptions",
    "Claim",
    "ClaimResult",
    "check",
    "check_all",
    "entries",
    "get_entry",
    "names",
]
