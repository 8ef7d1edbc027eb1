"""Structural predicates and walks over Graph values.

Connectivity and forest tests lean on networkx. The Euler tour, the longest
path tie-break and the Hamiltonian search are implemented here because their
determinism rules are part of the toolkit's contract.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from errors import GraphError, PreconditionError
from graphs.core import Edge, Graph
from logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Path:
    """Simple path v_0..v_p; consecutive vertices are host-graph edges."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise GraphError("a path needs at least one edge")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError(f"path {self.vertices} repeats a vertex")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def edges(self) -> list[Edge]:
        """Normalized edges in walking order."""
        return [
            (a, b) if a < b else (b, a)
            for a, b in zip(self.vertices, self.vertices[1:])
        ]


@dataclass(frozen=True)
class TreeStats:
    """Leaf count, internal vertex count n_I and degree sequence of a tree."""

    leaves: int
    internal: int
    degree_sequence: tuple[int, ...]


def components(g: Graph) -> list[list[int]]:
    """Connected components as ascending vertex lists, ordered by smallest vertex."""
    found = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(found, key=lambda c: c[0])


def is_connected(g: Graph) -> bool:
    return g.n > 0 and nx.is_connected(g.to_networkx())


def is_tree(g: Graph) -> bool:
    """True iff g is connected and m = n - 1."""
    return g.n > 0 and g.m == g.n - 1 and is_connected(g)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees in non-increasing order."""
    return tuple(sorted(g.degrees(), reverse=True))


def is_regular(g: Graph, degree: int) -> bool:
    return all(d == degree for d in g.degrees())


def is_eulerian(g: Graph) -> bool:
    """Connected (isolated vertices included) with every degree even."""
    return is_connected(g) and all(d % 2 == 0 for d in g.degrees())


def eulerian_failure(g: Graph) -> Optional[str]:
    """Name the first Eulerian condition g fails, or None."""
    if not is_connected(g):
        return "graph is not connected"
    odd = [v for v, d in enumerate(g.degrees()) if d % 2]
    if odd:
        return f"odd degree at vertices {odd}"
    return None


def closed_walk(g: Graph, edge_indices: Iterable[int], start: int) -> list[Edge]:
    """Stack-based Euler tour of the given edges from ``start``.

    Always follows the smallest-indexed unused neighbor, so the tour is a
    pure function of the edge set and the start vertex. The caller
    guarantees the edges form a connected even subgraph containing start.
    Returns oriented edges (x, y) in walking order.
    """
    neighbors: dict[int, list[tuple[int, int]]] = {}
    chosen = sorted(set(edge_indices))
    for index in chosen:
        u, v = g.edges[index]
        neighbors.setdefault(u, []).append((v, index))
        neighbors.setdefault(v, []).append((u, index))
    for entries in neighbors.values():
        entries.sort()
    if not chosen:
        return []

    pointer = dict.fromkeys(neighbors, 0)
    used: set[int] = set()
    stack = [start]
    tour: list[int] = []
    while stack:
        vertex = stack[-1]
        entries = neighbors.get(vertex, [])
        position = pointer.get(vertex, 0)
        while position < len(entries) and entries[position][1] in used:
            position += 1
        pointer[vertex] = position
        if position < len(entries):
            nxt, index = entries[position]
            used.add(index)
            stack.append(nxt)
        else:
            tour.append(stack.pop())
    tour.reverse()
    return list(zip(tour, tour[1:]))


def eulerian_circuit(g: Graph) -> list[Edge]:
    """Deterministic Euler circuit starting at vertex 0.

    Raises:
        PreconditionError: when g is not Eulerian, naming the failed condition
    """
    failure = eulerian_failure(g)
    if failure is not None:
        raise PreconditionError(
            f"graph is not Eulerian: {failure}", reason="not-eulerian"
        )
    walk = closed_walk(g, range(g.m), 0)
    if not is_closed_trail(g, walk):
        raise GraphError("Euler tour construction produced an invalid walk")
    return walk


def is_closed_trail(g: Graph, walk: Sequence[Edge], cover_all: bool = True) -> bool:
    """Check that walk is a closed trail of g (using every edge once if cover_all)."""
    if not walk:
        return g.m == 0 or not cover_all
    seen: set[Edge] = set()
    for position, (x, y) in enumerate(walk):
        if not g.has_edge(x, y):
            return False
        key = (x, y) if x < y else (y, x)
        if key in seen:
            return False
        seen.add(key)
        if position and walk[position - 1][1] != x:
            return False
    if walk[-1][1] != walk[0][0]:
        return False
    return len(seen) == g.m if cover_all else True


def _bfs_parents(
    adjacency: dict[int, list[int]], source: int
) -> tuple[dict[int, Optional[int]], dict[int, int]]:
    parents: dict[int, Optional[int]] = {source: None}
    depth = {source: 0}
    queue = deque([source])
    while queue:
        vertex = queue.popleft()
        for nbr in adjacency[vertex]:
            if nbr not in parents:
                parents[nbr] = vertex
                depth[nbr] = depth[vertex] + 1
                queue.append(nbr)
    return parents, depth


def _walk_back(parents: dict[int, Optional[int]], target: int) -> list[int]:
    route = [target]
    while parents[route[-1]] is not None:
        route.append(parents[route[-1]])
    return route


def longest_path(edges: Iterable[Sequence[int]]) -> Path:
    """Longest path inside an edge subset that forms a forest.

    Ties are broken by taking, among maximum-length paths, the one whose
    vertex sequence (read from its smaller endpoint) is lexicographically
    smallest.

    Raises:
        GraphError: on an empty subset or a subset containing a cycle
    """
    pairs = [(int(a), int(b)) for a, b in edges]
    if not pairs:
        raise GraphError("longest path of an empty edge subset is undefined")
    forest = nx.Graph()
    forest.add_edges_from(pairs)
    if forest.number_of_edges() != len(pairs) or not nx.is_forest(forest):
        raise GraphError("edge subset does not induce a forest")

    adjacency = {v: sorted(forest.neighbors(v)) for v in forest.nodes()}
    best: Optional[tuple[int, ...]] = None
    for source in sorted(adjacency):
        parents, depth = _bfs_parents(adjacency, source)
        # In a tree the BFS route back to source is the unique path.
        for target in parents:
            if target <= source:
                continue
            if best is not None and depth[target] + 1 < len(best):
                continue
            route = tuple(reversed(_walk_back(parents, target)))
            if (
                best is None
                or len(route) > len(best)
                or (len(route) == len(best) and route < best)
            ):
                best = route
    return Path(best)


def hamiltonian_cycle(g: Graph) -> Optional[list[int]]:
    """Spanning cycle found by exhaustive backtracking from vertex 0, or None.

    The returned cycle lists each vertex once, starting at 0; the closing edge
    back to 0 is implied.
    """
    n = g.n
    if n < 3 or not is_connected(g) or min(g.degrees()) < 2:
        return None

    adjacency = g.adjacency
    visited = [False] * n
    visited[0] = True
    route = [0]
    explored = 0

    def extend() -> bool:
        nonlocal explored
        explored += 1
        tail = route[-1]
        if len(route) == n:
            return g.has_edge(tail, 0)
        for nbr in adjacency[tail]:
            if visited[nbr]:
                continue
            visited[nbr] = True
            route.append(nbr)
            if extend():
                return True
            route.pop()
            visited[nbr] = False
        return False

    found = extend()
    logger.debug(f"Hamiltonian search on n={n}: {explored} partial paths, found={found}")
    return list(route) if found else None


def is_hamiltonian(g: Graph) -> bool:
    """True iff g has a spanning cycle."""
    return hamiltonian_cycle(g) is not None


def tree_stats(g: Graph) -> TreeStats:
    """Leaf count, internal count n_I and degree sequence of a tree.

    Raises:
        PreconditionError: when g is not a tree
    """
    if not is_tree(g):
        raise PreconditionError("tree statistics need a tree", reason="not-a-tree")
    degrees = g.degrees()
    leaves = sum(1 for d in degrees if d == 1)
    return TreeStats(
        leaves=leaves,
        internal=g.n - leaves,
        degree_sequence=degree_sequence(g),
    )
