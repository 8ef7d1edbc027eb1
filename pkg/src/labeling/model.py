"""Edge labelings, labeling kinds, tallies and verification reports.

A Labeling pairs a Graph with one nonzero integer per edge, aligned with the
graph's canonical edge order. Induced vertex labels f(v) are always derived
from the edge labels, never stored.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

import pandas as pd

from errors import AlphabetError, LabelingError
from graphs.core import Graph
from schemas.tallies import schema_tally, schema_violations


class KindName(str, Enum):
    H_CORDIAL = "h"
    SEMI_H_CORDIAL = "semi-h"
    ZERO_M_CORDIAL = "zero-m"
    HK_CORDIAL = "hk"


@dataclass(frozen=True)
class LabelingKind:
    """Which labeling definition applies; ``k`` only matters for HkCordial."""

    name: KindName
    k: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "name", KindName(self.name))
        if self.name is KindName.HK_CORDIAL:
            if self.k < 1:
                raise ValueError(f"HkCordial needs k >= 1, got k={self.k}")
        elif self.k != 1:
            raise ValueError(f"{self.name.value} labelings take no k, got k={self.k}")

    @classmethod
    def h_cordial(cls) -> LabelingKind:
        return cls(KindName.H_CORDIAL)

    @classmethod
    def semi_h_cordial(cls) -> LabelingKind:
        return cls(KindName.SEMI_H_CORDIAL)

    @classmethod
    def zero_m_cordial(cls) -> LabelingKind:
        return cls(KindName.ZERO_M_CORDIAL)

    @classmethod
    def hk_cordial(cls, k: int) -> LabelingKind:
        return cls(KindName.HK_CORDIAL, k)

    @property
    def max_label(self) -> int:
        """Largest allowed |f(e)|."""
        return self.k

    @property
    def label_values(self) -> tuple[int, ...]:
        """Allowed edge labels in search order: -k..-1, +1..+k."""
        return tuple(range(-self.k, 0)) + tuple(range(1, self.k + 1))

    def __str__(self) -> str:
        if self.name is KindName.HK_CORDIAL:
            return f"HkCordial({self.k})"
        return {
            KindName.H_CORDIAL: "HCordial",
            KindName.SEMI_H_CORDIAL: "SemiHCordial",
            KindName.ZERO_M_CORDIAL: "ZeroMCordial",
        }[self.name]

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name.value, "k": self.k}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> LabelingKind:
        return cls(KindName(data["name"]), int(data.get("k", 1)))


@dataclass(frozen=True)
class Labeling:
    """A graph plus one nonzero integer label per edge."""

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if len(self.labels) != self.graph.m:
            raise LabelingError(
                f"labeling has {len(self.labels)} labels for {self.graph.m} edges"
            )
        for edge, label in zip(self.graph.edges, self.labels):
            if label == 0:
                raise AlphabetError(f"edge {edge} has label 0", edge=edge, label=0)

    @classmethod
    def from_edge_map(cls, graph: Graph, labels: Mapping[tuple[int, int], int]) -> Labeling:
        """Build from an {edge: label} mapping; endpoints may come in any order."""
        aligned = [0] * graph.m
        for (u, v), label in labels.items():
            aligned[graph.edge_index(u, v)] = label
        missing = [graph.edges[i] for i, x in enumerate(aligned) if x == 0]
        if missing:
            raise LabelingError(f"no label given for edges {missing}")
        return cls(graph, tuple(aligned))

    def label_of(self, u: int, v: int) -> int:
        return self.labels[self.graph.edge_index(u, v)]

    def items(self) -> Iterable[tuple[tuple[int, int], int]]:
        return zip(self.graph.edges, self.labels)


@dataclass(frozen=True)
class Tally:
    """Edge tallies e_f(c) and vertex tallies v_f(c), keyed by exact value."""

    edge: dict[int, int]
    vertex: dict[int, int]

    def e(self, value: int) -> int:
        return self.edge.get(value, 0)

    def v(self, value: int) -> int:
        return self.vertex.get(value, 0)

    def to_frame(self) -> pd.DataFrame:
        rows = [("edge", value, count) for value, count in sorted(self.edge.items())]
        rows += [("vertex", value, count) for value, count in sorted(self.vertex.items())]
        frame = pd.DataFrame(rows, columns=["scope", "value", "count"]).astype(
            {"scope": str, "value": "int64", "count": "int64"}
        )
        return schema_tally.validate(frame)

    def to_dict(self) -> dict[str, dict[str, int]]:
        return {
            "edge": {str(k): c for k, c in sorted(self.edge.items())},
            "vertex": {str(k): c for k, c in sorted(self.vertex.items())},
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Mapping[str, int]]) -> Tally:
        return cls(
            edge={int(k): int(c) for k, c in data["edge"].items()},
            vertex={int(k): int(c) for k, c in data["vertex"].items()},
        )


@dataclass(frozen=True)
class Violation:
    condition: str
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a labeling against one definition.

    ``valid`` holds exactly when ``violations`` is empty. ``constant`` is the
    inferred K and is only set for HCordial.
    """

    kind: LabelingKind
    valid: bool
    tally: Tally
    constant: Optional[int] = None
    violations: tuple[Violation, ...] = field(default_factory=tuple)
    induced: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.valid != (not self.violations):
            raise ValueError("report validity must match an empty violation list")

    def violations_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            [(v.condition, v.detail) for v in self.violations],
            columns=["condition", "detail"],
        ).astype(str)
        return schema_violations.validate(frame)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.to_dict(),
            "valid": self.valid,
            "tally": self.tally.to_dict(),
            "constant": self.constant,
            "violations": [
                {"condition": v.condition, "detail": v.detail} for v in self.violations
            ],
            "induced": list(self.induced),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> VerificationReport:
        return cls(
            kind=LabelingKind.from_dict(data["kind"]),
            valid=bool(data["valid"]),
            tally=Tally.from_dict(data["tally"]),
            constant=data.get("constant"),
            violations=tuple(
                Violation(v["condition"], v["detail"]) for v in data.get("violations", [])
            ),
            induced=tuple(int(x) for x in data.get("induced", [])),
        )

    def render(self) -> str:
        """Human-readable report: status line, tally table, violations."""
        status = "VALID" if self.valid else "INVALID"
        lines = [f"{self.kind}: {status}"]
        if self.constant is not None:
            lines.append(f"K = {self.constant}")
        tally = self.tally.to_frame()
        lines.append(tally.to_string(index=False) if not tally.empty else "(empty tally)")
        if self.violations:
            lines.append("violations:")
            lines.append(self.violations_frame().to_string(index=False))
        return "\n".join(lines)


def induced_vertex_labels(labeling: Labeling) -> list[int]:
    """f(v) = sum of the labels on edges incident to v; isolated vertices get 0."""
    values = [0] * labeling.graph.n
    for (u, v), label in labeling.items():
        values[u] += label
        values[v] += label
    return values


def check_handshake(labeling: Labeling) -> bool:
    """Sum over vertices of f(v) equals twice the sum of edge labels."""
    return sum(induced_vertex_labels(labeling)) == 2 * sum(labeling.labels)


def tally(labeling: Labeling) -> Tally:
    """e_f(c) and v_f(c) for every value c that occurs."""
    return Tally(
        edge=dict(sorted(Counter(labeling.labels).items())),
        vertex=dict(sorted(Counter(induced_vertex_labels(labeling)).items())),
    )


def check_alphabet(labeling: Labeling, kind: LabelingKind) -> None:
    """Reject the first edge whose label falls outside 1 <= |f(e)| <= k.

    Raises:
        AlphabetError: naming the offending edge and label
    """
    for edge, label in labeling.items():
        if not 1 <= abs(label) <= kind.max_label:
            allowed = "{-1, +1}" if kind.max_label == 1 else f"±1..±{kind.max_label}"
            raise AlphabetError(
                f"edge {edge} has label {label}, outside {allowed} required by {kind}",
                edge=edge,
                label=label,
            )


def negate(labeling: Labeling) -> Labeling:
    """Flip the sign of every label."""
    return Labeling(labeling.graph, tuple(-x for x in labeling.labels))


def star_transform(labeling: Labeling, k: int) -> Labeling:
    """Map x > 0 to k + 1 - x and x < 0 to -k - 1 - x.

    Raises:
        AlphabetError: when a label lies outside ±1..±k
    """
    check_alphabet(labeling, LabelingKind.hk_cordial(k))
    return Labeling(
        labeling.graph,
        tuple(k + 1 - x if x > 0 else -k - 1 - x for x in labeling.labels),
    )
