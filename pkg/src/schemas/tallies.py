"""Pandera schemas for labeling tallies and report tables."""

from __future__ import annotations

import pandera as pa
from pandera import Check, Column, DataFrameSchema

schema_tally = DataFrameSchema(
    {
        "scope": Column(pa.String, Check.isin(["edge", "vertex"])),
        "value": Column(pa.Int64),
        "count": Column(pa.Int64, Check.ge(0)),
    },
    checks=[
        # edge labels are never zero; vertex values may be
        Check(
            lambda df: ~((df["scope"] == "edge") & (df["value"] == 0)),
            element_wise=False,
            error="edge tally contains the value 0",
        ),
    ],
)

schema_violations = DataFrameSchema(
    {
        "condition": Column(pa.String),
        "detail": Column(pa.String),
    }
)

schema_claims = DataFrameSchema(
    {
        "entry": Column(pa.String),
        "claim": Column(pa.String),
        "passed": Column(pa.Bool),
        "detail": Column(pa.String),
    }
)
