"""Edge-list text format for graphs.

Format: the first non-comment line holds "n m"; then m lines "u v" with
0 <= u < v < n. Lines starting with '#' are comments and blank lines are
ignored. Serialization emits the header and the edges in canonical order.
"""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path as FilePath
from typing import Union

from errors import GraphError, GraphFormatError
from graphs.core import Graph, make_graph


def content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield (line number, tokens) for every non-comment, non-blank line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def parse_int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {number}: '{token}' is not an integer") from None


def parse_header(lines: Iterator[tuple[int, list[str]]]) -> tuple[int, int]:
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise GraphFormatError("missing 'n m' header line") from None
    if len(tokens) != 2:
        raise GraphFormatError(f"line {number}: header must be 'n m', got {' '.join(tokens)!r}")
    n, m = (parse_int(t, number) for t in tokens)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {number}: counts must be non-negative")
    return n, m


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format into a normalized Graph.

    Raises:
        GraphFormatError: malformed header or edge lines, wrong edge count,
            endpoints out of range, loops or duplicates
    """
    lines = content_lines(text)
    n, m = parse_header(lines)
    pairs = []
    for number, tokens in lines:
        if len(tokens) != 2:
            raise GraphFormatError(f"line {number}: edge must be 'u v', got {' '.join(tokens)!r}")
        pairs.append((parse_int(tokens[0], number), parse_int(tokens[1], number)))
    if len(pairs) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(pairs)} were given")
    try:
        return make_graph(n, pairs)
    except GraphFormatError:
        raise
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def serialize_graph(g: Graph) -> str:
    """Canonical text form of g."""
    body = [f"{g.n} {g.m}"]
    body.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(body) + "\n"


def read_graph(path: Union[str, FilePath]) -> Graph:
    return parse_graph(FilePath(path).read_text(encoding="utf-8"))
