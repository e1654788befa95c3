"""Bundled graph catalogs."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graph_core import Graph, from_graph6

ATLAS_RESOURCE = "atlas_n1_7.g6"


def atlas_path():
    """Path-like handle to every graph on 1..7 vertices, up to isomorphism, in graph6."""
    return resources.files("bondage_bounds") / "data" / ATLAS_RESOURCE


@lru_cache(maxsize=1)
def atlas_graphs() -> tuple[Graph, ...]:
    text = atlas_path().read_text(encoding="ascii")
    return tuple(from_graph6(line) for line in text.split())
