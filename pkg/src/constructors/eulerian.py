"""Zero-M-cordial labelings from Euler circuits."""

from __future__ import annotations

from constructors._validate import ensure_valid
from errors import PreconditionError
from graphs.core import Edge, Graph
from graphs.structure import closed_walk, components
from labeling.model import Labeling, LabelingKind
from labeling.obstruction import ZERO_M_COMPONENTS
from logging_config import get_logger

logger = get_logger(__name__)


def zero_m(g: Graph) -> Labeling:
    """Label every component's Euler circuit alternately +1, -1.

    Each circuit starts at the smallest vertex of its component and follows
    the deterministic tour from graphs.structure. Components without edges
    are skipped.

    Raises:
        PreconditionError: a component has an odd-degree vertex or an odd
            number of edges; the component and the failed condition are named
        ConstructionError: the result fails verification
    """
    degrees = g.degrees()
    labels: dict[Edge, int] = {}
    for comp in components(g):
        members = set(comp)
        indices = [i for i, (u, _) in enumerate(g.edges) if u in members]
        if not indices:
            continue
        odd = [v for v in comp if degrees[v] % 2]
        if odd:
            raise PreconditionError(
                f"component of vertex {comp[0]} is not Eulerian: odd degree at {odd}",
                reason="component-not-eulerian",
                citation=ZERO_M_COMPONENTS,
            )
        if len(indices) % 2:
            raise PreconditionError(
                f"component of vertex {comp[0]} has an odd number of edges ({len(indices)})",
                reason="component-odd-size",
                citation=ZERO_M_COMPONENTS,
            )
        walk = closed_walk(g, indices, comp[0])
        for position, (x, y) in enumerate(walk):
            labels[(x, y) if x < y else (y, x)] = 1 if position % 2 == 0 else -1
        logger.debug(f"component of vertex {comp[0]}: circuit of {len(walk)} edges labeled")
    return ensure_valid(Labeling.from_edge_map(g, labels), LabelingKind.zero_m_cordial(), "zero_m")
