"""Semi-H-cordial labelings of trees.

The construction repeatedly peels a longest path off the remaining edge set
S and labels it alternately -a, +a, -a, ... . After each path, a becomes the
running sum of all labels assigned so far, or 1 when that sum is zero.
Endpoints of a longest path in a forest are leaves, so every vertex ends a
path at most once and |f(v)| <= 1 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from constructors._validate import ensure_valid
from errors import ConstructionError, PreconditionError
from graphs.core import Graph, make_graph
from graphs.structure import Path, is_tree, longest_path
from labeling.model import Labeling, LabelingKind, induced_vertex_labels, tally
from labeling.obstruction import SEMI_H_TREE_ORDER
from logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class AlgorithmStep:
    """One pass of the loop: the peeled path and the multiplier around it.

    ``settled`` maps every vertex whose edges are all labeled by the end of
    this pass to its induced value at that point.
    """

    path: Path
    a_before: int
    a_after: int
    running_sum: int
    settled: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class AlgorithmTrace:
    steps: tuple[AlgorithmStep, ...]
    labeling: Labeling


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise PreconditionError(
            f"graph with n={t.n}, m={t.m} is not a tree", reason="not-a-tree"
        )


def _peel_paths(t: Graph) -> AlgorithmTrace:
    labels: dict[tuple[int, int], int] = {}
    remaining = set(t.edges)
    left_degree = t.degrees()
    partial = [0] * t.n
    steps: list[AlgorithmStep] = []
    a = 1
    running = 0
    while remaining:
        path = longest_path(sorted(remaining))
        a_before = a
        for i, edge in enumerate(path.edges, start=1):
            labels[edge] = a if i % 2 == 0 else -a
            running += labels[edge]
            partial[edge[0]] += labels[edge]
            partial[edge[1]] += labels[edge]
            remaining.discard(edge)
            left_degree[edge[0]] -= 1
            left_degree[edge[1]] -= 1
        a = running if running != 0 else 1
        if a not in (-1, 1):
            raise ConstructionError(f"multiplier left {{-1, +1}} after path {path.vertices}: a={a}")
        settled = tuple((v, partial[v]) for v in range(t.n) if left_degree[v] == 0)
        if any(abs(value) > 1 for _, value in settled):
            raise ConstructionError(f"settled vertex left [-1, 1] after path {path.vertices}: {settled}")
        steps.append(AlgorithmStep(path, a_before, a, running, settled))
        logger.debug(f"peeled path {path.vertices} with a={a_before}; running sum {running}")
    return AlgorithmTrace(tuple(steps), Labeling.from_edge_map(t, labels))


def semi_h_tree_traced(t: Graph) -> AlgorithmTrace:
    """Run the path-peeling construction and keep every intermediate step.

    Raises:
        PreconditionError: t is not a tree, or has an even number of vertices
        ConstructionError: the result fails verification
    """
    _require_tree(t)
    if t.n % 2 == 0:
        raise PreconditionError(
            f"tree has an even number of vertices ({t.n})",
            reason="even-order-tree",
            citation=SEMI_H_TREE_ORDER,
        )
    trace = _peel_paths(t)
    ensure_valid(trace.labeling, LabelingKind.semi_h_cordial(), "semi_h_tree")
    counts = tally(trace.labeling)
    if counts.v(1) != counts.v(-1):
        raise ConstructionError(
            f"semi_h_tree left v_f(1)={counts.v(1)} and v_f(-1)={counts.v(-1)} unequal"
        )
    return trace


def semi_h_tree(t: Graph) -> Labeling:
    """Semi-H-cordial labeling of a tree with an odd number of vertices."""
    return semi_h_tree_traced(t).labeling


def near_semi_h_tree(t: Graph) -> Labeling:
    """Best-possible labeling of a tree with an even number of vertices.

    A phantom vertex w is hung off the smallest leaf, the odd tree is labeled
    with semi_h_tree and w is dropped again. The result has |f(v)| <= 1,
    |e_f(1) - e_f(-1)| = 1 and |v_f(1) - v_f(-1)| = 2.

    Raises:
        PreconditionError: t is not a tree, or has an odd number of vertices
        ConstructionError: the restricted labeling misses one of the bounds
    """
    _require_tree(t)
    if t.n % 2:
        raise PreconditionError(
            f"tree has an odd number of vertices ({t.n}); use semi_h_tree",
            reason="odd-order-tree",
        )
    leaf = min(v for v, d in enumerate(t.degrees()) if d == 1)
    phantom = t.n
    grown = make_graph(t.n + 1, list(t.edges) + [(leaf, phantom)])
    full = semi_h_tree(grown)
    kept = {edge: label for edge, label in full.items() if phantom not in edge}
    labeling = Labeling.from_edge_map(t, kept)

    counts = tally(labeling)
    induced = induced_vertex_labels(labeling)
    problems = []
    if any(abs(x) > 1 for x in induced):
        problems.append(f"|f(v)| > 1 in {induced}")
    if abs(counts.e(1) - counts.e(-1)) != 1:
        problems.append(f"edge imbalance {counts.e(1) - counts.e(-1)} is not ±1")
    if abs(counts.v(1) - counts.v(-1)) != 2:
        problems.append(f"vertex imbalance {counts.v(1) - counts.v(-1)} is not ±2")
    if problems:
        raise ConstructionError("near_semi_h_tree: " + "; ".join(problems))
    return labeling
