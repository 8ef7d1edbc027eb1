"""Edge labelings, the four verifiers, obstructions and the f* transform."""

from .io import parse_labeled, read_labeled, serialize_labeled, to_dot
from .model import (
    KindName,
    Labeling,
    LabelingKind,
    Tally,
    VerificationReport,
    Violation,
    check_alphabet,
    check_handshake,
    induced_vertex_labels,
    negate,
    star_transform,
    tally,
)
from .obstruction import Obstruction, obstruction, obstructions
from .verify import is_valid, verify

__all__ = [
    "parse_labeled",
    "read_labeled",
    "serialize_labeled",
    "to_dot",
    "KindName",
    "Labeling",
    "LabelingKind",
    "Tally",
    "VerificationReport",
    "Violation",
    "check_alphabet",
    "check_handshake",
    "induced_vertex_labels",
    "negate",
    "star_transform",
    "tally",
    "Obstruction",
    "obstruction",
    "obstructions",
    "is_valid",
    "verify",
]
