"""Exact bondage number by increasing-cardinality edge-subset search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .domination import domination_number, has_dominating_set_of_size
from .graph_core import Edge, Graph, common_neighbors, components, remove_edges


class BondageBudgetExceeded(RuntimeError):
    """No edge subset of size <= budget raises the domination number."""

    def __init__(self, budget: int):
        super().__init__(f"bondage search exhausted budget {budget} without an augmenting subset")
        self.budget = budget


@dataclass(frozen=True)
class BondageResult:
    b: int
    witness: tuple[Edge, ...]
    gamma_before: int
    gamma_after: int


def hr_bound(g: Graph) -> int:
    """Minimum over edges uv of d(u) + d(v) - 1 - |N(u) & N(v)|."""
    if g.m == 0:
        raise ValueError("hr_bound needs at least one edge")
    return min(
        len(g.adj[u]) + len(g.adj[v]) - 1 - common_neighbors(g, u, v)
        for u, v in g.edges()
    )


def _connected_bondage(g: Graph, budget: int) -> BondageResult:
    gamma, _ = domination_number(g)
    edges = g.edges()
    for k in range(1, min(budget, len(edges)) + 1):
        for subset in combinations(edges, k):
            h = remove_edges(g, subset)
            if not has_dominating_set_of_size(h, gamma):
                after, _ = domination_number(h)
                return BondageResult(k, subset, gamma, after)
    raise BondageBudgetExceeded(budget)


def bondage_number(g: Graph, budget: int | None = None) -> BondageResult:
    """Smallest edge set whose removal raises gamma(G).

    Disconnected graphs are split into components and the minimum over the
    components that have edges is returned, with the witness mapped back to
    ``g``'s vertex ids.  ``budget`` caps the subset size tried; it defaults to
    :func:`hr_bound`, which always suffices.
    """
    if g.m == 0:
        raise ValueError("bondage number is undefined for an edgeless graph")
    if budget is None:
        budget = hr_bound(g)
    if budget < 1:
        raise ValueError("budget must be positive")
    parts = [c for c in components(g) if c.graph.m > 0]
    best: BondageResult | None = None
    best_part = None
    for part in parts:
        cap = budget if best is None else min(budget, best.b - 1)
        if cap < 1:
            break
        try:
            res = _connected_bondage(part.graph, cap)
        except BondageBudgetExceeded:
            continue
        best, best_part = res, part
    if best is None:
        raise BondageBudgetExceeded(budget)
    if best_part.graph.n == g.n:
        return best
    gamma_total, _ = domination_number(g)
    vmap = best_part.vertices
    witness = tuple(sorted((vmap[u], vmap[v]) for u, v in best.witness))
    return BondageResult(
        best.b,
        witness,
        gamma_total,
        gamma_total + best.gamma_after - best.gamma_before,
    )
