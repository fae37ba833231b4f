"""Path decompositions of Levi graphs L1(m, k) and complete graphs K_m."""

from .gallai import ConstructionTrace, decompose_k2, gallai_decompose, star_decompose
from .graphs import (
    DomainError,
    Graph,
    IsoMap,
    LeviGraph,
    LeviPartition,
    build_complete,
    build_levi,
    llg_to_levi,
    partition_levi,
    ulg_to_levi,
)
from .minimal import certify_l1m2, min_decompose_l1m2, min_size_l1m2
from .oddgraph import BudgetExceeded, odd_graph_decompose
from .oracle import check_tightness, exact_path_number
from .paths import (
    VerificationReport,
    edge_count_lower_bound,
    floor_bound,
    gallai_bound,
    max_path_length_bound,
    odd_vertex_lower_bound,
    pascal_floor_holds,
    verify_decomposition,
    verify_path,
)
from .walecki import walecki, walecki_even, walecki_odd

__all__ = [
    "ConstructionTrace",
    "decompose_k2",
    "gallai_decompose",
    "star_decompose",
    "DomainError",
    "Graph",
    "IsoMap",
    "LeviGraph",
    "LeviPartition",
    "build_complete",
    "build_levi",
    "llg_to_levi",
    "partition_levi",
    "ulg_to_levi",
    "certify_l1m2",
    "min_decompose_l1m2",
    "min_size_l1m2",
    "BudgetExceeded",
    "odd_graph_decompose",
    "check_tightness",
    "exact_path_number",
    "VerificationReport",
    "edge_count_lower_bound",
    "floor_bound",
    "gallai_bound",
    "max_path_length_bound",
    "odd_vertex_lower_bound",
    "pascal_floor_holds",
    "verify_decomposition",
    "verify_path",
    "walecki",
    "walecki_even",
    "walecki_odd",
]

__version__ = "0.1.0"
