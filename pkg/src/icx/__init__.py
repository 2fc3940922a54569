"""Graphs, their independence complexes, and what graph operations preserve."""

from .complexes import (
    ShellingOrder,
    ShellingVerdict,
    SimplicialComplex,
    find_shelling,
    independence_complex,
    is_pure,
    is_shellable,
    is_unmixed,
    make_complex,
    verify_shelling,
)
from .decomposability import (
    VDResult,
    VDWitness,
    is_shedding_vertex,
    is_vertex_decomposable,
    replay_witness,
    shedding_vertices,
)
from .errors import GraphError, IcxError, ResourceCapExceeded, SchemaError
from .graph import (
    Graph,
    build_graph,
    delete_vertices,
    disjoint_relabel,
    girth,
    has_cycle_subgraph,
    independence_number,
    induced_subgraph,
    is_chordal,
    is_complete,
    is_independent,
    is_totally_disconnected,
    is_vertex_cover,
    maximal_independent_sets,
    neighborhood,
    vertex_cover_number,
)
from .homology import (
    BettiVector,
    CMVerdict,
    graph_betti,
    is_cohen_macaulay,
    link,
    reduced_betti,
)
from .ops import (
    GraphFamily,
    cartesian_product,
    corona,
    disjoint_union,
    join,
    lexicographic_product,
    make_family,
    pair_label,
    rooted_product,
    split_pair,
    uniform_family,
)
from .shellings import (
    corona_shelling,
    find_shell2_shelling,
    lexicographic_shelling,
    verify_shell2_hypothesis,
)

__all__ = [name for name in dir() if not name.startswith("_")]
