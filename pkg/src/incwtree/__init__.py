"""Associated primes of powers of edge ideals of increasing weighted trees,
with a brute-force monomial-ideal oracle to check them against."""

from .assoc import AssResult, StabilityReport, ass_infinity, ass_power, astab, is_associated
from .covers import (
    CoverReport,
    RootedComponent,
    analyze_cover,
    build_G_S,
    decompose,
    enumerate_vertex_covers,
    is_strong_cover_by_definition,
    is_vertex_cover,
    nu,
)
from .graph import WeightedGraph, build_graph, is_tree, load_graph
from .increasing import (
    RootedIncreasingTree,
    is_increasing_path,
    is_increasing_tree,
    mu,
    special_count_rooted,
    special_vertices_rooted,
    valid_roots,
)

__version__ = "0.1.0"
