"""decymatch: decide whether removing a matching can make a graph a forest.

The library decides matching-decyclability exactly for small graphs, runs the
linear-time structural deciders for chordal, split, distance-hereditary,
cograph, and fairly cubic inputs, recognizes those classes with certificates,
and builds the gadget reduction that makes the fairly cubic case hard.
"""

from .blocks import BlockDecomposition, block_decomposition, classify_block
from .core import (
    DegreeProfile,
    Graph,
    GraphError,
    Matching,
    ParseError,
    PreconditionError,
    SizeCapError,
    build_graph,
    degree_profile,
    is_acyclic,
    parse_edge_list,
    read_graph,
    remove_edges,
    serialize_edge_list,
    validate_matching,
    write_graph,
)
from .decycle import (
    MdStarShape,
    Verdict,
    check_spanning_tree_characterization,
    decide_auto,
    decide_chordal,
    decide_cograph,
    decide_dh,
    decide_fairly_cubic,
    decide_split,
    match_md_star,
    min_decycling_edge_count,
    oracle_decide,
    witness_size_chordal,
)
from .gadgets import (
    GadgetLayout,
    GadgetPropertyReport,
    HamPathSet,
    build_gadget_g1,
    build_gadget_main,
    enumerate_terminal_ham_paths,
    verify_gadget_properties,
)
from .recognize import (
    ClassReport,
    SparseReport,
    class_report,
    density_ok,
    find_bad_subgraph,
    is_biconnected,
    is_chordal,
    is_cograph,
    is_distance_hereditary,
    is_sparse_2conn_dh,
    is_sparse_chordal,
    is_split,
    sparse_report,
)
from .reduction import (
    ReductionResult,
    build_reduction,
    expand_vertex_forced_edge,
    lift_solution,
    project_solution,
    witness_hamiltonian_cycle,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "ClassReport",
    "DegreeProfile",
    "GadgetLayout",
    "GadgetPropertyReport",
    "Graph",
    "GraphError",
    "HamPathSet",
    "Matching",
    "MdStarShape",
    "ParseError",
    "PreconditionError",
    "ReductionResult",
    "SizeCapError",
    "SparseReport",
    "Verdict",
    "block_decomposition",
    "build_gadget_g1",
    "build_gadget_main",
    "build_graph",
    "build_reduction",
    "check_spanning_tree_characterization",
    "class_report",
    "classify_block",
    "decide_auto",
    "decide_chordal",
    "decide_cograph",
    "decide_dh",
    "decide_fairly_cubic",
    "decide_split",
    "degree_profile",
    "density_ok",
    "enumerate_terminal_ham_paths",
    "expand_vertex_forced_edge",
    "find_bad_subgraph",
    "is_acyclic",
    "is_biconnected",
    "is_chordal",
    "is_cograph",
    "is_distance_hereditary",
    "is_sparse_2conn_dh",
    "is_sparse_chordal",
    "is_split",
    "lift_solution",
    "match_md_star",
    "min_decycling_edge_count",
    "oracle_decide",
    "parse_edge_list",
    "project_solution",
    "read_graph",
    "remove_edges",
    "serialize_edge_list",
    "sparse_report",
    "validate_matching",
    "verify_gadget_properties",
    "witness_hamiltonian_cycle",
    "witness_size_chordal",
    "write_graph",
]
