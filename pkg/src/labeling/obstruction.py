"""Necessary conditions that rule a labeling kind out for a graph.

Each test is a parity or degree argument: when one fires, no valid labeling
of that kind exists. When none fires nothing is claimed either way.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Optional

from graphs.core import Graph
from graphs.structure import components, is_tree
from labeling.model import KindName, LabelingKind

M_MINUS_N_PARITY = "an H-cordial graph has m - n even"
TREES_NOT_H_CORDIAL = "no tree is H-cordial"
DEGREE_PARITY = "f(v) has the parity of deg(v), so |f(v)| = K forces one degree parity"
ISOLATED_VERTEX = "an isolated vertex has f(v) = 0"
H2_EVEN_ORDER = "an H2-cordial graph with an even number of vertices has an even number of edges"
H1_ODD_DEGREES = "|f(v)| = 1 everywhere forces every degree odd"
SEMI_H_TREE_ORDER = "a tree is semi-H-cordial only when it has an odd number of vertices"
ZERO_M_COMPONENTS = "each component must be Eulerian with an even number of edges"


@dataclass(frozen=True)
class Obstruction:
    """A failed necessary condition.

    Attributes:
        reason: short machine-friendly name
        detail: what was observed on the graph
        citation: the statement the obstruction rests on
    """

    reason: str
    detail: str
    citation: str

    def __str__(self) -> str:
        return f"{self.reason}: {self.detail} ({self.citation})"


def _m_minus_n_odd(g: Graph, kind: LabelingKind) -> Optional[Obstruction]:
    if (g.m - g.n) % 2 == 0:
        return None
    return Obstruction(
        "m-n-odd", f"m - n = {g.m} - {g.n} = {g.m - g.n} is odd", M_MINUS_N_PARITY
    )


def _tree(g: Graph, kind: LabelingKind) -> Optional[Obstruction]:
    if not is_tree(g):
        return None
    return Obstruction("tree", f"graph is a tree on {g.n} vertices", TREES_NOT_H_CORDIAL)


def _mixed_degree_parity(g: Graph, kind: LabelingKind) -> Optional[Obstruction]:
    degrees = g.degrees()
    odd = [v for v, d in enumerate(degrees) if d % 2]
    if not odd or len(odd) == g.n:
        return None
    even = [v for v, d in enumerate(degrees) if d % 2 == 0]
    return Obstruction(
        "mixed-degree-parity",
        f"vertex {odd[0]} has odd degree and vertex {even[0]} has even degree",
        DEGREE_PARITY,
    )


def _isolated_vertex(g: Graph, kind: LabelingKind) -> Optional[Obstruction]:
    isolated = [v for v, d in enumerate(g.degrees()) if d == 0]
    if not isolated:
        return None
    return Obstruction("isolated-vertex", f"vertex {isolated[0]} has degree 0", ISOLATED_VERTEX)


def _h2_even_order_odd_size(g: Graph, kind: LabelingKind) -> Optional[Obstruction]:
    if kind.k != 2 or g.n % 2 or g.m % 2 == 0:
        return None
    return Obstruction(
        "even-n-odd-m", f"n = {g.n} is even and m = {g.m} is odd", H2_EVEN_ORDER
    )


def _h1_even_degree(g: Graph, kind: LabelingKind) -> Optional[Obstruction]:
    if kind.k != 1:
        return None
    if g.n % 2:
        return Obstruction(
            "odd-order", f"n = {g.n} is odd but every degree must be odd", H1_ODD_DEGREES
        )
    even = [v for v, d in enumerate(g.degrees()) if d % 2 == 0]
    if not even:
        return None
    return Obstruction(
        "even-degree", f"vertex {even[0]} has even degree {g.degree(even[0])}", H1_ODD_DEGREES
    )


def _semi_h_even_tree(g: Graph, kind: LabelingKind) -> Optional[Obstruction]:
    if not is_tree(g) or g.n % 2:
        return None
    return Obstruction(
        "even-order-tree", f"tree has an even number of vertices ({g.n})", SEMI_H_TREE_ORDER
    )


def _zero_m_component(g: Graph, kind: LabelingKind) -> Optional[Obstruction]:
    degrees = g.degrees()
    for comp in components(g):
        members = set(comp)
        indices = [i for i, (u, _) in enumerate(g.edges) if u in members]
        if not indices:
            continue
        odd = [v for v in comp if degrees[v] % 2]
        if odd:
            return Obstruction(
                "component-not-eulerian",
                f"component of vertex {comp[0]} has odd degree at vertices {odd}",
                ZERO_M_COMPONENTS,
            )
        size = len(indices)
        if size % 2:
            return Obstruction(
                "component-odd-size",
                f"component of vertex {comp[0]} has {size} edges",
                ZERO_M_COMPONENTS,
            )
    return None


Rule = Callable[[Graph, LabelingKind], Optional[Obstruction]]

RULES: dict[KindName, tuple[Rule, ...]] = {
    KindName.H_CORDIAL: (_m_minus_n_odd, _tree, _mixed_degree_parity, _isolated_vertex),
    KindName.HK_CORDIAL: (_h2_even_order_odd_size, _h1_even_degree, _isolated_vertex),
    KindName.SEMI_H_CORDIAL: (_semi_h_even_tree,),
    KindName.ZERO_M_CORDIAL: (_zero_m_component,),
}


def obstructions(g: Graph, kind: LabelingKind) -> list[Obstruction]:
    """Every implemented obstruction that fires, in a fixed order."""
    found = (rule(g, kind) for rule in RULES[kind.name])
    return [o for o in found if o is not None]


def obstruction(g: Graph, kind: LabelingKind) -> Optional[Obstruction]:
    """First obstruction that fires, or None.

    None does not mean a valid labeling exists.
    """
    fired = obstructions(g, kind)
    return fired[0] if fired else None
