"""Hand-transcribed counterexample graphs and their published labelings.

Each drawn point is a vertex and each drawn segment an edge. Where a drawing
encodes signs by stroke, thick means +1 and thin means -1. The comments give
the drawing coordinates of every vertex id so a transcription can be checked
against the picture point by point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from graphs.core import Graph, make_graph
from graphs.generators import star_graph
from labeling.model import Labeling, LabelingKind


@dataclass(frozen=True)
class Figure:
    """A transcribed graph with its optional published labeling."""

    graph: Graph
    labeling: Optional[Labeling]
    kind: Optional[LabelingKind]
    description: str


def _signed(n: int, thick: list[tuple[int, int]], thin: list[tuple[int, int]]) -> Labeling:
    g = make_graph(n, thick + thin)
    labels = {edge: 1 for edge in thick}
    labels.update({edge: -1 for edge in thin})
    return Labeling.from_edge_map(g, labels)


def odd_tree_one_internal() -> Figure:
    # 0 = center, 1..5 = leaves
    return Figure(
        graph=star_graph(5),
        labeling=None,
        kind=None,
        description=(
            "Star K_{1,5}: six vertices, all of odd degree, n = 2 (mod 4), "
            "and exactly one internal vertex."
        ),
    )


def odd_tree_two_internal() -> Figure:
    # 0 = center of degree 5; 1 = the (196.66, 49.67) neighbor carrying leaves 6, 7
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7)]
    return Figure(
        graph=make_graph(8, edges),
        labeling=None,
        kind=None,
        description=(
            "Eight-vertex tree: a degree-5 center with one neighbor of degree 3; "
            "all degrees odd, n = 0 (mod 4), two internal vertices."
        ),
    )


def odd_minus_one_count() -> Figure:
    # 0 = apex T (28.33, 43.33)   1 = A (3.33, 3.33)    2 = B (53.33, 3.33)
    # 3 = inner I (28.33, 18.33)  4 = P1 (8.33, 58.33)  5 = P2 (48.33, 58.33)
    thin = [(0, 1), (1, 2), (0, 2), (0, 3)]
    thick = [(1, 3), (2, 3), (0, 4), (0, 5)]
    return Figure(
        graph=make_graph(6, thick + thin),
        labeling=_signed(6, thick, thin),
        kind=LabelingKind.h_cordial(),
        description=(
            "Triangle T-A-B with an inner vertex joined to all three corners and "
            "two pendants on the apex. The labeling is H-cordial with K = 1 and "
            "three vertices at -1, an odd count."
        ),
    )


def cubic_non_hamiltonian() -> Figure:
    # v0 (41.67, 1.67)    v1 (61.67, 1.67)    v2 (61.67, 16.67)   v3 (41.67, 16.67)
    # v4 (41.67, 21.67)   v5 (41.67, 36.67)   v6 (41.67, 41.67)   v7 (41.67, 56.67)
    # v8 (61.67, 56.67)   v9 (61.67, 41.67)   v10 (61.67, 36.67)  v11 (61.67, 21.67)
    # v12 (21.67, 9.17)   v13 (81.67, 9.17)   v14 (81.67, 29.17)  v15 (81.67, 49.17)
    # v16 (21.67, 49.17)  v17 (21.67, 29.17)  v18 (1.67, 29.17)   v19 (101.67, 29.17)
    thin = [
        (12, 18), (2, 3), (1, 3), (0, 1), (13, 19), (15, 19), (7, 8), (6, 8),
        (6, 9), (16, 18), (4, 17), (5, 17), (5, 11), (11, 14), (10, 14),
    ]  # fmt: skip
    thick = [
        (6, 16), (7, 16), (7, 9), (9, 15), (8, 15), (5, 10), (4, 10), (4, 11),
        (3, 12), (0, 12), (0, 2), (2, 13), (1, 13), (14, 19), (17, 18),
    ]  # fmt: skip
    return Figure(
        graph=make_graph(20, thick + thin),
        labeling=_signed(20, thick, thin),
        kind=LabelingKind.h_cordial(),
        description=(
            "Cubic graph on 20 vertices: three six-vertex blocks hang between "
            "v18 and v19, so no spanning cycle exists, yet the drawn labeling "
            "is H-cordial."
        ),
    )


def triangle_quadrilateral() -> Figure:
    # 0 = c (32.67, 62.33)  1 = a (62.67, 42.33)  2 = b (2.67, 42.33)
    # 3 = d (32.67, 42.33)  4 = e (32.67, 12.33)  5 = f (62.67, 2.33)
    # 6 = g (2.67, 2.33)
    # Ids put the degree-2 vertex c first so vertices complete early in
    # canonical edge order.
    printed = {
        (2, 6): 1, (3, 4): 2, (1, 5): 1, (2, 4): -1, (1, 4): -1, (3, 5): -1, (3, 6): -1,
        (4, 6): 1, (4, 5): 1, (5, 6): 1, (2, 3): 1, (1, 3): 1, (0, 1): 1, (0, 2): 1,
    }  # fmt: skip
    g = make_graph(7, list(printed))
    return Figure(
        graph=g,
        labeling=Labeling.from_edge_map(g, printed),
        kind=LabelingKind.hk_cordial(2),
        description=(
            "A triangle and a quadrilateral joined through the two degree-5 "
            "vertices d and e: 7 vertices, 14 edges. The printed labels put "
            "every induced value at 2. The drawing generalizes to a C_r and a "
            "C_{r+1}; only r = 3 is encoded."
        ),
    )


def fstar_counterexample() -> Figure:
    # 0 = hub v (degree 4); 1 = p0 (label 2); 2 = p6, 3 = p5, 4 = p2 (label -1);
    # 5 = p3 and 6 = p4 hang off p2 with label 1
    labels = {(0, 1): 2, (0, 2): -1, (0, 3): -1, (0, 4): -1, (4, 5): 1, (4, 6): 1}
    g = make_graph(7, list(labels))
    return Figure(
        graph=g,
        labeling=Labeling.from_edge_map(g, labels),
        kind=LabelingKind.hk_cordial(2),
        description=(
            "Seven-vertex tree with an H2-cordial labeling whose f* image puts "
            "-5 on the hub."
        ),
    )
