"""Graph representation for the labeling toolkit.

A Graph is a simple undirected graph on vertices 0..n-1 whose edge list is
kept normalized: every pair ordered (u, v) with u < v, the list strictly
increasing lexicographically. The edge order is the canonical order that
labelings align with and that the oracle searches in.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; build it with make_graph()."""

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def _index(self) -> dict[Edge, int]:
        return {edge: i for i, edge in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples, one per vertex."""
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in neighbors)

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge {u, v} in the canonical edge order."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise GraphError(f"edge {key} is not in the graph") from None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._index

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a normalized Graph.

    Each pair is reordered to (u, v) with u < v and the list is sorted.
    Loops, duplicates and out-of-range endpoints are rejected with the
    offending pair named.

    Raises:
        GraphError: on a negative vertex count, a self-loop, a duplicate edge
            or an endpoint outside 0..n-1
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")

    seen: set[Edge] = set()
    normalized: list[Edge] = []
    for pair in edges:
        if len(pair) != 2:
            raise GraphError(f"edge {tuple(pair)} does not have two endpoints")
        a, b = int(pair[0]), int(pair[1])
        if a == b:
            raise GraphError(f"self-loop ({a}, {b}) is not allowed in a simple graph")
        for endpoint in (a, b):
            if endpoint < 0 or endpoint >= n:
                raise GraphError(
                    f"edge ({a}, {b}) has endpoint {endpoint} outside 0..{n - 1}"
                )
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphError(f"duplicate edge ({a}, {b})")
        seen.add(key)
        normalized.append(key)

    normalized.sort()
    return Graph(n=n, edges=tuple(normalized))


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph, relabeling nodes 0..n-1 in sorted order."""
    nodes = sorted(graph.nodes())
    position = {node: i for i, node in enumerate(nodes)}
    return make_graph(len(nodes), [(position[u], position[v]) for u, v in graph.edges()])


def edge_subgraph(g: Graph, edge_indices: Iterable[int]) -> Graph:
    """Spanning subgraph of g keeping only the given edges."""
    return make_graph(g.n, [g.edges[i] for i in edge_indices])
