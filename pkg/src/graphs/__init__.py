"""Graph representation, family generators and structural predicates."""

from .core import Edge, Graph, edge_subgraph, from_networkx, make_graph
from .generators import (
    FAMILIES,
    complete_graph,
    connected_graphs,
    cycle_graph,
    family_graph,
    nonisomorphic_trees,
    path_graph,
    random_graph,
    random_tree,
    star_graph,
    tree_from_prufer,
    wheel_graph,
)
from .io import parse_graph, read_graph, serialize_graph
from .structure import (
    Path,
    TreeStats,
    components,
    degree_sequence,
    eulerian_circuit,
    hamiltonian_cycle,
    is_closed_trail,
    is_connected,
    is_eulerian,
    is_hamiltonian,
    is_regular,
    is_tree,
    longest_path,
    tree_stats,
)

__all__ = [
    "Edge",
    "Graph",
    "edge_subgraph",
    "from_networkx",
    "make_graph",
    "FAMILIES",
    "complete_graph",
    "connected_graphs",
    "cycle_graph",
    "family_graph",
    "nonisomorphic_trees",
    "path_graph",
    "random_graph",
    "random_tree",
    "star_graph",
    "tree_from_prufer",
    "wheel_graph",
    "parse_graph",
    "read_graph",
    "serialize_graph",
    "Path",
    "TreeStats",
    "components",
    "degree_sequence",
    "eulerian_circuit",
    "hamiltonian_cycle",
    "is_closed_trail",
    "is_connected",
    "is_eulerian",
    "is_hamiltonian",
    "is_regular",
    "is_tree",
    "longest_path",
    "tree_stats",
]
