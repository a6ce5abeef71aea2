"""Persistent-homology lower bounds on distances between high-order networks."""

__version__ = "0.1.0"

from .bottleneck import (
    bottleneck_bruteforce,
    bottleneck_distance,
    bottleneck_matrix,
    matching_cost,
)
from .embed import (
    DistanceMatrix,
    Embedding2D,
    linear_boundary_errors,
    mds_embed,
    one_vs_rest_errors,
)
from .exact import (
    BoundVector,
    correspondence_difference,
    exact_k_order_distance,
    exact_pnorm_distance,
    pnorm,
    pnorm_lower_bound,
    upper_bound_distance,
    zero_order_distance,
)
from .filtration import Filtration, Simplex, boundary, build_filtration
from .generators import GenConfig, generate, lift_pairwise
from .ingest import PublicationRecord, build_coauthorship, read_records_csv, read_records_jsonl
from .network import (
    Correspondence,
    HighOrderNetwork,
    Mode,
    apply_epsilon,
    augment,
    canonical_key,
    dual,
    from_json_dict,
    load_network,
    normalize_counts,
    save_network,
    to_json_dict,
    truncate,
    validate,
)
from .persistence import (
    PersistenceDiagram,
    compute_persistence,
    network_diagrams,
    prune,
)

__all__ = [
    "BoundVector",
    "Correspondence",
    "DistanceMatrix",
    "Embedding2D",
    "Filtration",
    "GenConfig",
    "HighOrderNetwork",
    "Mode",
    "PersistenceDiagram",
    "PublicationRecord",
    "Simplex",
    "apply_epsilon",
    "augment",
    "bottleneck_bruteforce",
    "bottleneck_distance",
    "bottleneck_matrix",
    "boundary",
    "build_coauthorship",
    "build_filtration",
    "canonical_key",
    "compute_persistence",
    "correspondence_difference",
    "dual",
    "exact_k_order_distance",
    "exact_pnorm_distance",
    "from_json_dict",
    "generate",
    "lift_pairwise",
    "linear_boundary_errors",
    "load_network",
    "matching_cost",
    "mds_embed",
    "network_diagrams",
    "normalize_counts",
    "one_vs_rest_errors",
    "pnorm",
    "pnorm_lower_bound",
    "prune",
    "read_records_csv",
    "read_records_jsonl",
    "save_network",
    "to_json_dict",
    "truncate",
    "upper_bound_distance",
    "validate",
    "zero_order_distance",
]
