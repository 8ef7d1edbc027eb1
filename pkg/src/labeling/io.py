"""Labeled-graph text format and DOT export.

Format: a "n m" header, then m lines "u v L" with L a nonzero integer. Comment
and blank-line rules match the plain graph format.
"""

from __future__ import annotations

from pathlib import Path as FilePath
from typing import Optional, Union

from errors import GraphError, GraphFormatError
from graphs.core import make_graph
from graphs.io import content_lines, parse_header, parse_int
from labeling.model import Labeling, induced_vertex_labels


def parse_labeled(text: str) -> Labeling:
    """Parse the labeled-graph format.

    Labels are realigned to the graph's canonical edge order.

    Raises:
        GraphFormatError: malformed lines, wrong edge count, zero labels or
            an invalid edge list
    """
    lines = content_lines(text)
    n, m = parse_header(lines)
    pairs: list[tuple[int, int]] = []
    labels: list[int] = []
    for number, tokens in lines:
        if len(tokens) != 3:
            raise GraphFormatError(
                f"line {number}: labeled edge must be 'u v L', got {' '.join(tokens)!r}"
            )
        u, v, label = (parse_int(t, number) for t in tokens)
        if label == 0:
            raise GraphFormatError(f"line {number}: edge ({u}, {v}) has label 0")
        pairs.append((u, v))
        labels.append(label)
    if len(pairs) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(pairs)} were given")
    try:
        graph = make_graph(n, pairs)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from exc
    return Labeling.from_edge_map(graph, dict(zip(pairs, labels)))


def serialize_labeled(labeling: Labeling, comment: Optional[str] = None) -> str:
    g = labeling.graph
    body = [f"# {line}" for line in comment.splitlines()] if comment else []
    body.append(f"{g.n} {g.m}")
    body.extend(f"{u} {v} {label}" for (u, v), label in labeling.items())
    return "\n".join(body) + "\n"


def read_labeled(path: Union[str, FilePath]) -> Labeling:
    return parse_labeled(FilePath(path).read_text(encoding="utf-8"))


def to_dot(labeling: Labeling, name: str = "G") -> str:
    """DOT rendering: positive edges bold, negative edges thin.

    Every edge carries its label and every vertex is annotated with its
    induced value.
    """
    induced = induced_vertex_labels(labeling)
    safe = "".join(ch if ch.isalnum() or ch == "_" else "_" for ch in name) or "G"
    lines = [f"graph {safe} {{", "  node [shape=circle];"]
    for vertex, value in enumerate(induced):
        lines.append(f'  {vertex} [label="{vertex}\\n{value:+d}"];')
    for (u, v), label in labeling.items():
        width = 3 if label > 0 else 1
        style = "bold" if label > 0 else "solid"
        lines.append(f'  {u} -- {v} [label="{label:+d}", style={style}, penwidth={width}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
