"""Forests of labelled rooted uniform hypertrees: codec, counts, sampling.

The package encodes such forests as compact 4-tuple codes and back, counts
them (and their hypercycle cousins) with exact arithmetic, cross-checks
everything against brute-force enumeration at desk scale, and offers
uniform random sampling plus rank/unrank indexing for unique-ID streams.
"""

from .codec import (
    Block,
    ForestCode,
    ForestShape,
    decode_code,
    encode_forest,
    validate_code,
)
from .counting import (
    CycleSumIdentity,
    count_forests,
    count_hypercycles,
    count_rooted_hypertrees,
    cycle_sum_identity,
    hypercycle_class_count,
)
from .errors import (
    BudgetExceededError,
    HyperforestError,
    InvalidStructureError,
    InvariantViolation,
    ParameterRangeError,
)
from .forest import (
    Component,
    ComponentReport,
    Hyperedge,
    LeafBlock,
    RootedForest,
    ValidationReport,
    VertexId,
    component_decomposition,
    leaf_blocks,
    validate_forest,
)
from .oracle import (
    DEFAULT_BUDGET,
    AuditReport,
    audit_hypercycles,
    enumerate_code_space,
    enumerate_forests,
    enumerate_hypercycles,
)
from .ranking import (
    code_space_size,
    generate_ids,
    rank_code,
    sample_code,
    sample_forest,
    sample_forests,
    unrank_code,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "Block",
    "BudgetExceededError",
    "Component",
    "ComponentReport",
    "CycleSumIdentity",
    "DEFAULT_BUDGET",
    "ForestCode",
    "ForestShape",
    "Hyperedge",
    "HyperforestError",
    "InvalidStructureError",
    "InvariantViolation",
    "LeafBlock",
    "ParameterRangeError",
    "RootedForest",
    "ValidationReport",
    "VertexId",
    "audit_hypercycles",
    "code_space_size",
    "component_decomposition",
    "count_forests",
    "count_hypercycles",
    "count_rooted_hypertrees",
    "cycle_sum_identity",
    "decode_code",
    "encode_forest",
    "enumerate_code_space",
    "enumerate_forests",
    "enumerate_hypercycles",
    "generate_ids",
    "hypercycle_class_count",
    "leaf_blocks",
    "rank_code",
    "sample_code",
    "sample_forest",
    "sample_forests",
    "unrank_code",
    "validate_code",
    "validate_forest",
]
