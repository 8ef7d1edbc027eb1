"""Pandera schemas for the toolkit's tabular outputs."""

from .tallies import schema_claims, schema_tally, schema_violations

__all__ = ["schema_claims", "schema_tally", "schema_violations"]
