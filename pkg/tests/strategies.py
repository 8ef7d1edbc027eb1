"""Hypothesis strategies for graphs, labelings and Prüfer trees."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from graphs import Graph, make_graph, tree_from_prufer
from labeling import Labeling


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


@st.composite
def labelings(draw, k: int = 1, min_n: int = 1, max_n: int = 8) -> Labeling:
    g = draw(graphs(min_n=min_n, max_n=max_n))
    values = [x for x in range(-k, k + 1) if x != 0]
    labels = draw(st.lists(st.sampled_from(values), min_size=g.m, max_size=g.m))
    return Labeling(g, tuple(labels))


@st.composite
def prufer_trees(draw, min_n: int = 3, max_n: int = 25, odd: bool = False) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if odd and n % 2 == 0:
        n = n + 1 if n < max_n else n - 1
    sequence = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_from_prufer(sequence)
