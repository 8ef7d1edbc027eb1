"""H-cordial and H2-cordial labelings of complete graphs.

n = 0 (mod 4): the perfect matching (2i, 2i+1) takes +1 on even i and -1 on
odd i; the rest of K_n is Eulerian with an even edge count and gets a
zero-M labeling. Every vertex then sits at its matching label, K = 1.

n = 3 (mod 4), n >= 7: write n = 4p + 3. The first 4p vertices carry the
n = 0 (mod 4) labeling. Their +1 vertices are dealt out in pairs (a_i, b_i)
and their -1 vertices in pairs (c_i, d_i); the last three vertices u, v, w
form a triangle and are joined to every quadruple through a fixed gadget.
All degrees in K_n are then even, so every |f(v)| comes out as 2.
"""

from __future__ import annotations

from constructors._validate import ensure_valid
from constructors.eulerian import zero_m
from errors import ConstructionError, PreconditionError
from graphs.core import Edge, make_graph
from graphs.generators import complete_graph
from labeling.model import Labeling, LabelingKind, induced_vertex_labels
from labeling.obstruction import H2_EVEN_ORDER, M_MINUS_N_PARITY
from logging_config import get_logger

logger = get_logger(__name__)

K3_EXHAUSTED = "none of the 8 labelings of K_3 is H-cordial"

# Signs between the hub triple and one quadruple. The first quadruple is
# joined to u entirely by +1 edges; every later one uses the balanced gadget.
TRIANGLE = {("u", "v"): -1, ("u", "w"): -1, ("v", "w"): 1}
FIRST_GADGET = {
    ("u", "a"): 1, ("u", "b"): 1, ("u", "c"): 1, ("u", "d"): 1,
    ("v", "a"): 1, ("v", "b"): -1, ("v", "c"): -1, ("v", "d"): -1,
    ("w", "a"): -1, ("w", "b"): 1, ("w", "c"): -1, ("w", "d"): -1,
}  # fmt: skip
LATER_GADGET = {
    ("u", "a"): 1, ("u", "b"): 1, ("u", "c"): -1, ("u", "d"): -1,
    ("v", "a"): 1, ("v", "b"): -1, ("v", "c"): 1, ("v", "d"): -1,
    ("w", "a"): -1, ("w", "b"): 1, ("w", "c"): -1, ("w", "d"): 1,
}  # fmt: skip


def _key(x: int, y: int) -> Edge:
    return (x, y) if x < y else (y, x)


def _multiple_of_four(n: int) -> dict[Edge, int]:
    matching = {(2 * i, 2 * i + 1): (1 if i % 2 == 0 else -1) for i in range(n // 2)}
    rest = make_graph(n, [e for e in complete_graph(n).edges if e not in matching])
    labels = dict(zero_m(rest).items())
    labels.update(matching)
    return labels


def _three_mod_four(n: int) -> dict[Edge, int]:
    p = (n - 3) // 4
    inner = _multiple_of_four(4 * p)
    induced = induced_vertex_labels(Labeling.from_edge_map(complete_graph(4 * p), inner))
    plus = [v for v, value in enumerate(induced) if value == 1]
    minus = [v for v, value in enumerate(induced) if value == -1]
    hub = {"u": 4 * p, "v": 4 * p + 1, "w": 4 * p + 2}

    labels = dict(inner)
    for (x, y), sign in TRIANGLE.items():
        labels[_key(hub[x], hub[y])] = sign
    for i in range(p):
        quad = {
            "a": plus[2 * i],
            "b": plus[2 * i + 1],
            "c": minus[2 * i],
            "d": minus[2 * i + 1],
        }
        gadget = FIRST_GADGET if i == 0 else LATER_GADGET
        for (x, y), sign in gadget.items():
            labels[_key(hub[x], quad[y])] = sign
    return labels


def h_cordial_complete(n: int) -> Labeling:
    """H-cordial labeling of K_n for n = 0 or 3 (mod 4), n != 3.

    K is 1 when 4 divides n and 2 when n = 3 (mod 4).

    Raises:
        PreconditionError: n = 1, 2 (mod 4), n = 3 or n < 1
        ConstructionError: the result fails verification
    """
    if n < 1:
        raise PreconditionError(f"K_n needs n >= 1, got {n}", reason="empty-graph")
    if n % 4 in (1, 2):
        m = n * (n - 1) // 2
        raise PreconditionError(
            f"K_{n} has m - n = {m - n}, which is odd",
            reason="m-n-odd",
            citation=M_MINUS_N_PARITY,
        )
    if n == 3:
        raise PreconditionError("K_3 is not H-cordial", reason="k3", citation=K3_EXHAUSTED)

    labels = _multiple_of_four(n) if n % 4 == 0 else _three_mod_four(n)
    labeling = Labeling.from_edge_map(complete_graph(n), labels)
    ensure_valid(labeling, LabelingKind.h_cordial(), f"h_cordial_complete({n})")
    expected = 1 if n % 4 == 0 else 2
    constant = abs(induced_vertex_labels(labeling)[0])
    if constant != expected:
        raise ConstructionError(f"h_cordial_complete({n}) gave K={constant}, expected {expected}")
    logger.debug(f"K_{n} labeled with K={constant}")
    return labeling


def h2_cordial_complete(n: int) -> Labeling:
    """H2-cordial labeling of K_n, reusing the H-cordial construction.

    Raises:
        PreconditionError: n = 2 (mod 4) (even n with odd m), or any n the
            H-cordial construction does not cover
        ConstructionError: the result fails H2 verification
    """
    if n >= 1 and n % 4 == 2:
        raise PreconditionError(
            f"K_{n} has n = {n} even and m = {n * (n - 1) // 2} odd",
            reason="even-n-odd-m",
            citation=H2_EVEN_ORDER,
        )
    if n < 1 or n == 3 or n % 4 == 1:
        raise PreconditionError(
            f"no H2-cordial construction for K_{n}", reason="no-construction"
        )
    labeling = h_cordial_complete(n)
    return ensure_valid(labeling, LabelingKind.hk_cordial(2), f"h2_cordial_complete({n})")
