"""Domination and bondage numbers, embeddings, and bondage-number bounds for small graphs."""

from .bondage import BondageBudgetExceeded, BondageResult, bondage_number, hr_bound
from .domination import DominatingSet, domination_number, is_dominating
from .graph_core import Graph, from_graph6, girth, to_graph6

__all__ = [
    "BondageBudgetExceeded",
    "BondageResult",
    "DominatingSet",
    "Graph",
    "bondage_number",
    "domination_number",
    "from_graph6",
    "girth",
    "hr_bound",
    "is_dominating",
    "to_graph6",
]
