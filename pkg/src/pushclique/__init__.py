"""Push-operation analysis of oriented graphs and the planar push-clique census."""
from .graph import CapacityError, OrientedGraph, UndirectedGraph, VertexSet
from .push import (
    ReachMode,
    are_push_equivalent,
    is_oclique,
    is_push_clique_fast,
    is_push_clique_oracle,
    is_reach_complete,
    is_underlying_push_clique,
    orientation_class_reps,
    push,
)

__all__ = [
    "CapacityError",
    "OrientedGraph",
    "ReachMode",
    "UndirectedGraph",
    "VertexSet",
    "are_push_equivalent",
    "is_oclique",
    "is_push_clique_fast",
    "is_push_clique_oracle",
    "is_reach_complete",
    "is_underlying_push_clique",
    "orientation_class_reps",
    "push",
]
