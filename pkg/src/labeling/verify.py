"""Verifiers for the four labeling definitions."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Optional

from graphs.core import Graph
from labeling.model import (
    KindName,
    Labeling,
    LabelingKind,
    Tally,
    VerificationReport,
    Violation,
    check_alphabet,
    induced_vertex_labels,
    tally,
)
from logging_config import get_logger

logger = get_logger(__name__)


def _balance(counts: dict[int, int], value: int, scope: str) -> Optional[Violation]:
    plus, minus = counts.get(value, 0), counts.get(-value, 0)
    if abs(plus - minus) <= 1:
        return None
    return Violation(
        f"{scope}-balance",
        f"|{scope[0]}_f({value}) - {scope[0]}_f({-value})| = |{plus} - {minus}| > 1",
    )


def _bad_vertices(induced: Sequence[int], ok: Callable[[int], bool]) -> list[int]:
    return [v for v, value in enumerate(induced) if not ok(value)]


def _describe(vertices: list[int], induced: Sequence[int], limit: int = 8) -> str:
    shown = ", ".join(f"f({v})={induced[v]}" for v in vertices[:limit])
    extra = len(vertices) - limit
    return shown + (f" (+{extra} more)" if extra > 0 else "")


def _check_h_cordial(
    g: Graph, induced: Sequence[int], counts: Tally
) -> tuple[Optional[int], list[Violation]]:
    violations: list[Violation] = []
    if g.n == 0:
        return None, [Violation("uniform-k", "graph has no vertices, K is undefined")]
    constant = abs(induced[0])
    if constant == 0:
        violations.append(Violation("uniform-k", "f(0) = 0, K must be positive"))
    else:
        off = _bad_vertices(induced, lambda x: abs(x) == constant)
        if off:
            violations.append(
                Violation("uniform-k", f"|f(v)| != K={constant} at {_describe(off, induced)}")
            )
    for found in (
        _balance(counts.edge, 1, "edge"),
        _balance(counts.vertex, constant, "vertex") if constant else None,
    ):
        if found:
            violations.append(found)
    return (constant or None), violations


def _check_semi_h(induced: Sequence[int], counts: Tally) -> list[Violation]:
    violations = []
    off = _bad_vertices(induced, lambda x: abs(x) <= 1)
    if off:
        violations.append(Violation("vertex-range", f"|f(v)| > 1 at {_describe(off, induced)}"))
    for found in (_balance(counts.edge, 1, "edge"), _balance(counts.vertex, 1, "vertex")):
        if found:
            violations.append(found)
    return violations


def _check_zero_m(induced: Sequence[int]) -> list[Violation]:
    off = _bad_vertices(induced, lambda x: x == 0)
    if not off:
        return []
    return [Violation("vertex-zero", f"f(v) != 0 at {_describe(off, induced)}")]


def _check_hk(induced: Sequence[int], counts: Tally, k: int) -> list[Violation]:
    violations = []
    off = _bad_vertices(induced, lambda x: 1 <= abs(x) <= k)
    if off:
        violations.append(
            Violation("vertex-range", f"|f(v)| outside 1..{k} at {_describe(off, induced)}")
        )
    for i in range(1, k + 1):
        for found in (_balance(counts.edge, i, "edge"), _balance(counts.vertex, i, "vertex")):
            if found:
                violations.append(found)
    return violations


def verify(labeling: Labeling, kind: LabelingKind) -> VerificationReport:
    """Check a labeling against one definition and itemize every failed condition.

    Raises:
        AlphabetError: a label lies outside the kind's alphabet; nothing is tallied
    """
    check_alphabet(labeling, kind)
    induced = induced_vertex_labels(labeling)
    counts = tally(labeling)
    constant: Optional[int] = None

    if kind.name is KindName.H_CORDIAL:
        constant, violations = _check_h_cordial(labeling.graph, induced, counts)
    elif kind.name is KindName.SEMI_H_CORDIAL:
        violations = _check_semi_h(induced, counts)
    elif kind.name is KindName.ZERO_M_CORDIAL:
        violations = _check_zero_m(induced)
    else:
        violations = _check_hk(induced, counts, kind.k)

    report = VerificationReport(
        kind=kind,
        valid=not violations,
        tally=counts,
        constant=constant,
        violations=tuple(violations),
        induced=tuple(induced),
    )
    logger.debug(
        f"verify {kind} on n={labeling.graph.n} m={labeling.graph.m}: "
        f"valid={report.valid} violations={len(violations)}"
    )
    return report


def is_valid(labeling: Labeling, kind: LabelingKind) -> bool:
    return verify(labeling, kind).valid
