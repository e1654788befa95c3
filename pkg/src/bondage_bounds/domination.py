"""Exact domination number by branch and bound over closed neighbourhoods."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph_core import Graph


@dataclass(frozen=True)
class DominatingSet:
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def closed_masks(g: Graph) -> list[int]:
    """Bitmask of N[v] for every vertex v."""
    masks = []
    for v in range(g.n):
        mask = 1 << v
        for u in g.adj[v]:
            mask |= 1 << u
        masks.append(mask)
    return masks


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    masks = closed_masks(g)
    covered = 0
    for v in d:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise IndexError(f"vertex {v!r} out of range for n={g.n}")
        covered |= masks[v]
    return covered == (1 << g.n) - 1


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _greedy(masks: list[int], full: int) -> list[int]:
    chosen = []
    covered = 0
    while covered != full:
        best_v, best_gain = -1, 0
        for v, mask in enumerate(masks):
            gain = (mask & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        covered |= masks[best_v]
    return chosen


class _Search:
    """Depth-first search for a dominating set smaller than ``self.best``."""

    def __init__(self, masks: list[int], incumbent: list[int], stop_at: int):
        self.masks = masks
        self.n = len(masks)
        self.full = (1 << self.n) - 1
        self.cover = max((m.bit_count() for m in masks), default=1)
        self.best = list(incumbent)
        # a set of this size or smaller is good enough; stop as soon as one is found
        self.stop_at = stop_at

    def run(self) -> list[int]:
        if len(self.best) > self.stop_at:
            self._branch(0, [])
        return self.best

    def _branch(self, covered: int, chosen: list[int]) -> bool:
        undominated = self.full & ~covered
        if not undominated:
            self.best = list(chosen)
            return len(chosen) <= self.stop_at
        lower = -(-undominated.bit_count() // self.cover)
        if len(chosen) + lower >= len(self.best):
            return False
        # undominated vertex with the fewest choices, lowest id on ties
        pick, pick_choices = -1, self.n + 1
        for v in _bits(undominated):
            c = self.masks[v].bit_count()
            if c < pick_choices:
                pick, pick_choices = v, c
        for w in _bits(self.masks[pick]):
            chosen.append(w)
            done = self._branch(covered | self.masks[w], chosen)
            chosen.pop()
            if done:
                return True
        return False


def domination_number(g: Graph) -> tuple[int, DominatingSet]:
    """Exact gamma(G) with a minimum dominating set as witness."""
    if g.n == 0:
        return 0, DominatingSet(())
    masks = closed_masks(g)
    incumbent = _greedy(masks, (1 << g.n) - 1)
    best = _Search(masks, incumbent, stop_at=-1).run()
    return len(best), DominatingSet(tuple(sorted(best)))


def has_dominating_set_of_size(g: Graph, k: int) -> bool:
    """True iff gamma(G) <= k.  Stops at the first witness."""
    if g.n == 0:
        return k >= 0
    masks = closed_masks(g)
    incumbent = _greedy(masks, (1 << g.n) - 1)
    if len(incumbent) <= k:
        return True
    # pretend the incumbent has size k+1 so only strictly better sets are explored
    best = _Search(masks, list(range(k + 1)), stop_at=k).run()
    return len(best) <= k
