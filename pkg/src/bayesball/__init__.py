"""Irrelevance and requisite information for belief networks and influence diagrams."""

from .bayes_ball import MarkState, Query, RequisiteResult, is_irrelevant, query, requisites, run
from .decision import InfluenceDiagram, decision_requisites, information_sets, relevant_values
from .graph import Network, NodeKind, descendants, functionally_determined, parents, validate

__all__ = [
    "MarkState",
    "Query",
    "RequisiteResult",
    "is_irrelevant",
    "query",
    "requisites",
    "run",
    "InfluenceDiagram",
    "decision_requisites",
    "information_sets",
    "relevant_values",
    "Network",
    "NodeKind",
    "descendants",
    "functionally_determined",
    "parents",
    "validate",
]
