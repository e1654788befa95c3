"""Simple undirected graphs on dense integer vertex ids.

Graphs are immutable: every operation that changes the edge set returns a
fresh :class:`Graph`.  The graph6 codec and a handful of standard families
(cycles, paths, complete graphs, the Petersen graph) live here too, since
everything else in the package is built on top of them.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]

# Girth of an acyclic graph.  A float so that comparisons with ints work, but
# callers should test ``is_finite_girth`` rather than compare against it.
INFINITE_GIRTH = math.inf


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the strictly increasing tuple of neighbours of ``v``.
    Use :meth:`from_edges` to build one; the constructor validates.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    _edges: tuple[Edge, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have exactly n rows")
        edges = []
        for v, row in enumerate(self.adj):
            prev = -1
            for u in row:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if u <= prev:
                    raise ValueError(f"adjacency of {v} not strictly increasing")
                prev = u
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                if v < u:
                    edges.append((v, u))
        edges.sort()
        object.__setattr__(self, "_edges", tuple(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[Edge, ...]:
        """Canonical edge list: pairs ``(u, v)`` with ``u < v`` in lexicographic order."""
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise IndexError(f"vertex {v!r} out of range for n={self.n}")

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("max_degree of the empty graph is undefined")
    return max(len(row) for row in g.adj)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("min_degree of the empty graph is undefined")
    return min(len(row) for row in g.adj)


def common_neighbors(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    return len(set(g.neighbors(u)) & set(g.neighbors(v)))


def is_finite_girth(value: float) -> bool:
    return value != INFINITE_GIRTH


def girth(g: Graph) -> float:
    """Length of the shortest cycle, or ``INFINITE_GIRTH`` for a forest.

    BFS from every root; a non-tree edge ``xy`` met during the search closes
    a walk through the root of length ``dist[x] + dist[y] + 1``, and the
    minimum of those over all roots is the girth.
    """
    best = INFINITE_GIRTH
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            # every cycle still to be found from here has length >= 2*dist[x]
            if 2 * dist[x] >= best:
                break
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


@dataclass(frozen=True)
class Component:
    graph: Graph
    # vertices[i] is the id in the parent graph of local vertex i
    vertices: tuple[int, ...]


def components(g: Graph) -> list[Component]:
    """Connected components as induced subgraphs, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        members = []
        while stack:
            x = stack.pop()
            members.append(x)
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        members.sort()
        local = {v: i for i, v in enumerate(members)}
        sub = Graph(
            len(members),
            tuple(tuple(local[u] for u in g.adj[v]) for v in members),
        )
        out.append(Component(sub, tuple(members)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def remove_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    drop = set()
    for u, v in edges:
        e = (u, v) if u < v else (v, u)
        if not g.has_edge(*e):
            raise ValueError(f"edge {e} not in graph")
        drop.add(e)
    return Graph.from_edges(g.n, (e for e in g.edges() if e not in drop))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = ((u + g.n, v + g.n) for u, v in h.edges())
    return Graph.from_edges(g.n + h.n, [*g.edges(), *shifted])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Copy of ``g`` with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of range(n)")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


# --- graph6 -----------------------------------------------------------------

GRAPH6_MAX_N = 62
_GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoder supports at most {GRAPH6_MAX_N} vertices")
    bits = [
        1 if i in g.adj[j] else 0
        for j in range(1, g.n)
        for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise ValueError(f"invalid graph6 character in {text!r}")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 decoder supports at most {GRAPH6_MAX_N} vertices")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise ValueError(f"graph6 string {text!r} has wrong length for n={n}")
    bits = []
    for c in body:
        value = ord(c) - 63
        bits.extend((value >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise ValueError(f"nonzero padding in graph6 string {text!r}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6_file(path) -> list[Graph]:
    graphs = []
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                graphs.append(from_graph6(line))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    return graphs


# --- standard families --------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
