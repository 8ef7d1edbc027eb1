"""Reference enumerator: every assignment, checked with verify().

Shares no code with the pruned search beyond the verifier, so the two can
be compared on small graphs.
"""

from __future__ import annotations

from itertools import product

from graphs.core import Graph
from labeling.model import Labeling, LabelingKind
from labeling.verify import verify


def naive_witnesses(g: Graph, kind: LabelingKind) -> list[Labeling]:
    """All valid labelings of g, in lexicographic order of label values."""
    found = []
    for labels in product(kind.label_values, repeat=g.m):
        labeling = Labeling(g, labels)
        if verify(labeling, kind).valid:
            found.append(labeling)
    return found


def naive_exists(g: Graph, kind: LabelingKind) -> bool:
    for labels in product(kind.label_values, repeat=g.m):
        if verify(Labeling(g, labels), kind).valid:
            return True
    return False
