"""Exhaustive search for valid labelings."""

from .models import Decision, SearchConfig, SearchOutcome, SearchStatistics
from .naive import naive_exists, naive_witnesses
from .search import decide, decide_with_symmetry, enumerate_labelings

__all__ = [
    "Decision",
    "SearchConfig",
    "SearchOutcome",
    "SearchStatistics",
    "naive_exists",
    "naive_witnesses",
    "decide",
    "decide_with_symmetry",
    "enumerate_labelings",
]
