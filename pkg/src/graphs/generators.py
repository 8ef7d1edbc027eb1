"""Generators for the graph families the toolkit labels.

Vertices are 0-indexed. Wheels put the hub at vertex 0 and the rim at 1..n,
matching the v_0..v_n naming used by the wheel constructions.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations
from typing import Optional

import networkx as nx

from errors import GraphError
from graphs.core import Graph, from_networkx, make_graph

FAMILIES = ("complete", "wheel", "cycle", "path", "star")


def complete_graph(n: int) -> Graph:
    """K_n with all C(n, 2) edges."""
    if n < 1:
        raise GraphError(f"complete graph needs at least one vertex, got n={n}")
    return make_graph(n, combinations(range(n), 2))


def wheel_graph(n: int) -> Graph:
    """W_n: hub 0 joined to every vertex of the rim cycle 1-2-...-n-1."""
    if n < 3:
        raise GraphError(f"wheel rim needs at least 3 vertices, got n={n}")
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return make_graph(n + 1, spokes + rim)


def cycle_graph(n: int) -> Graph:
    """C_n on vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got n={n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """P_n on vertices 0..n-1 in path order."""
    if n < 1:
        raise GraphError(f"path needs at least one vertex, got n={n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """K_{1,n}: center 0 joined to leaves 1..n."""
    if n < 1:
        raise GraphError(f"star needs at least one leaf, got n={n}")
    return make_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def family_graph(family: str, n: int) -> Graph:
    """Dispatch on a family name from FAMILIES."""
    builders = {
        "complete": complete_graph,
        "wheel": wheel_graph,
        "cycle": cycle_graph,
        "path": path_graph,
        "star": star_graph,
    }
    try:
        builder = builders[family]
    except KeyError:
        raise GraphError(
            f"unknown family '{family}', expected one of {', '.join(FAMILIES)}"
        ) from None
    return builder(n)


def tree_from_prufer(sequence: list[int]) -> Graph:
    """Decode a Prüfer sequence over 0..len(sequence)+1 into a labeled tree."""
    return from_networkx(nx.from_prufer_sequence(list(sequence)))


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    """Uniform random labeled tree on n vertices via a random Prüfer sequence."""
    if n < 1:
        raise GraphError(f"tree needs at least one vertex, got n={n}")
    if n == 1:
        return make_graph(1, [])
    if n == 2:
        return make_graph(2, [(0, 1)])
    rng = random.Random(seed)
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)])


def nonisomorphic_trees(n: int) -> Iterator[Graph]:
    """Every tree on n vertices, one per isomorphism class."""
    if n < 1:
        raise GraphError(f"tree needs at least one vertex, got n={n}")
    if n <= 2:
        yield path_graph(n)
        return
    for tree in nx.nonisomorphic_trees(n):
        yield from_networkx(tree)


def connected_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """Every connected graph on min_n..max_n vertices up to isomorphism.

    Backed by the networkx graph atlas, which covers all graphs on at most
    seven vertices.
    """
    if max_n > 7:
        raise GraphError(f"graph atlas only covers up to 7 vertices, got max_n={max_n}")
    for atlas_graph in nx.graph_atlas_g():
        order = atlas_graph.number_of_nodes()
        if order < max(min_n, 1) or order > max_n:
            continue
        if nx.is_connected(atlas_graph):
            yield from_networkx(atlas_graph)


def random_graph(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """Erdős–Rényi G(n, p) sample, used by property tests and sweeps."""
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))
