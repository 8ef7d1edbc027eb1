"""Search configuration, outcomes and statistics for the labeling oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from labeling.model import Labeling, LabelingKind


class Decision(str, Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    UNDECIDED = "undecided-budget"


@dataclass(frozen=True)
class SearchConfig:
    """How to search.

    Attributes:
        kind: labeling definition to search for
        canonical: return the lexicographically smallest witness (label
            values ordered -k..-1, +1..+k over the canonical edge order)
        limit: maximum number of witnesses to collect; None means all
        budget: cap on partial assignments visited; None falls back to
            config.ORACLE_BUDGET
        workers: worker threads; None falls back to config.ORACLE_WORKERS
        prune_vertex: reject completed vertices that break the vertex
            condition, and open vertices that can no longer reach it
        prune_cardinality: reject prefixes whose edge or completed-vertex
            tallies can no longer balance
        symmetry: fix the first edge's label positive
        split_depth: prefix length used to cut the search into tasks; None
            falls back to config.ORACLE_SPLIT_DEPTH
    """

    kind: LabelingKind
    canonical: bool = True
    limit: Optional[int] = 1
    budget: Optional[int] = None
    workers: Optional[int] = None
    prune_vertex: bool = True
    prune_cardinality: bool = True
    symmetry: bool = False
    split_depth: Optional[int] = None

    def __post_init__(self) -> None:
        if self.limit is not None and self.limit < 1:
            raise ValueError(f"limit must be >= 1, got {self.limit}")
        if self.budget is not None and self.budget < 0:
            raise ValueError(f"budget must be non-negative, got {self.budget}")
        if self.workers is not None and self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.split_depth is not None and self.split_depth < 0:
            raise ValueError(f"split_depth must be non-negative, got {self.split_depth}")

    @classmethod
    def naive(cls, kind: LabelingKind, **overrides: Any) -> SearchConfig:
        """No pruning and no symmetry: every assignment is visited."""
        return cls(kind, prune_vertex=False, prune_cardinality=False, **overrides)


@dataclass(frozen=True)
class SearchStatistics:
    """Work counters.

    ``nodes`` counts partial assignments tried (the budgeted quantity);
    ``assignments`` counts complete assignments that reached the final check.
    """

    nodes: int = 0
    assignments: int = 0
    prunes: int = 0
    tasks: int = 0
    wall_time: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "nodes": self.nodes,
            "assignments": self.assignments,
            "prunes": self.prunes,
            "tasks": self.tasks,
            "wall_time": round(self.wall_time, 6),
        }


@dataclass(frozen=True)
class SearchOutcome:
    """Decision plus witnesses.

    FOUND carries at least one verified witness; EXHAUSTED means the whole
    space was searched without one; UNDECIDED means the budget ran out first.
    ``truncated`` is set whenever the budget cut the search short, including
    enumerations that found some witnesses before stopping.
    """

    decision: Decision
    kind: LabelingKind
    statistics: SearchStatistics
    witnesses: tuple[Labeling, ...] = field(default_factory=tuple)
    truncated: bool = False

    def __post_init__(self) -> None:
        if (self.decision is Decision.FOUND) != bool(self.witnesses):
            raise ValueError("FOUND outcomes carry witnesses and only they do")

    @property
    def witness(self) -> Optional[Labeling]:
        return self.witnesses[0] if self.witnesses else None

    @property
    def found(self) -> bool:
        return self.decision is Decision.FOUND

    def to_dict(self) -> dict[str, Any]:
        return {
            "decision": self.decision.value,
            "kind": self.kind.to_dict(),
            "statistics": self.statistics.to_dict(),
            "truncated": self.truncated,
            "witnesses": [list(w.labels) for w in self.witnesses],
        }

    def render(self) -> str:
        stats = self.statistics
        lines = [
            f"{self.kind}: {self.decision.value}",
            f"nodes={stats.nodes} assignments={stats.assignments} "
            f"prunes={stats.prunes} tasks={stats.tasks} wall_time={stats.wall_time:.3f}s",
        ]
        if self.truncated:
            lines.append("search stopped at the budget")
        for number, w in enumerate(self.witnesses, start=1):
            labels = " ".join(f"{x:+d}" for x in w.labels)
            lines.append(f"witness {number}: {labels}")
        return "\n".join(lines)
