"""One labeler per graph family; every result is verified before it is returned."""

from .complete import h2_cordial_complete, h_cordial_complete
from .eulerian import zero_m
from .trees import (
    AlgorithmStep,
    AlgorithmTrace,
    near_semi_h_tree,
    semi_h_tree,
    semi_h_tree_traced,
)
from .wheels import h2_cordial_wheel, h_cordial_wheel

__all__ = [
    "h2_cordial_complete",
    "h_cordial_complete",
    "zero_m",
    "AlgorithmStep",
    "AlgorithmTrace",
    "near_semi_h_tree",
    "semi_h_tree",
    "semi_h_tree_traced",
    "h2_cordial_wheel",
    "h_cordial_wheel",
]
