"""H-cordial and H2-cordial labelings of wheels W_n (hub 0, rim 1..n)."""

from __future__ import annotations

from constructors._validate import ensure_valid
from errors import PreconditionError
from graphs.core import Edge
from graphs.generators import wheel_graph
from labeling.model import Labeling, LabelingKind
from labeling.obstruction import M_MINUS_N_PARITY


def _require_rim(n: int) -> None:
    if n < 3:
        raise PreconditionError(f"wheel rim needs at least 3 vertices, got {n}", reason="small-rim")


def _rim(n: int, i: int) -> Edge:
    """Rim edge v_i v_{i+1}, with v_{n+1} = v_1."""
    j = i % n + 1
    return (i, j) if i < j else (j, i)


def h_cordial_wheel(n: int) -> Labeling:
    """H-cordial labeling of W_n for odd n.

    Spokes v_0v_i and rim edges v_iv_{i+1} are +1 for even i, as is the spoke
    v_0v_1; all other edges are -1. The hub gets +1 and v_i gets (-1)^i.

    Raises:
        PreconditionError: n < 3, or n even (W_n then has m - n odd)
        ConstructionError: the result fails verification
    """
    _require_rim(n)
    if n % 2 == 0:
        raise PreconditionError(
            f"W_{n} has m - n = {2 * n} - {n + 1} = {n - 1}, which is odd",
            reason="m-n-odd",
            citation=M_MINUS_N_PARITY,
        )
    labels: dict[Edge, int] = {}
    for i in range(1, n + 1):
        sign = 1 if i % 2 == 0 else -1
        labels[(0, i)] = 1 if i == 1 else sign
        labels[_rim(n, i)] = sign
    return ensure_valid(
        Labeling.from_edge_map(wheel_graph(n), labels),
        LabelingKind.h_cordial(),
        f"h_cordial_wheel({n})",
    )


def h2_cordial_wheel(n: int) -> Labeling:
    """H2-cordial labeling of W_n for every n >= 3.

    Odd n reuses h_cordial_wheel. Even n labels v_iv_{i+1} and v_0v_i (i >= 2)
    with (-1)^i and puts -2 on the spoke v_0v_1, which leaves the hub at -1
    and v_1 at -2. A +2 on that spoke would push the hub to 3.

    Raises:
        PreconditionError: n < 3
        ConstructionError: the result fails verification
    """
    _require_rim(n)
    kind = LabelingKind.hk_cordial(2)
    if n % 2:
        return ensure_valid(h_cordial_wheel(n), kind, f"h2_cordial_wheel({n})")
    labels: dict[Edge, int] = {(0, 1): -2}
    for i in range(1, n + 1):
        sign = 1 if i % 2 == 0 else -1
        labels[_rim(n, i)] = sign
        if i >= 2:
            labels[(0, i)] = sign
    return ensure_valid(
        Labeling.from_edge_map(wheel_graph(n), labels), kind, f"h2_cordial_wheel({n})"
    )
