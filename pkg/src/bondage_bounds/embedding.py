"""Rotation systems, face tracing, Euler characteristic and edge curvature.

Darts are integers: edge ``i`` of the canonical edge list ``(u, v)`` with
``u < v`` yields dart ``2*i`` (u -> v) and dart ``2*i + 1`` (v -> u), so
reversal is ``d ^ 1``.  A rotation system gives, for each vertex, the cyclic
order of its neighbours, together with a set of edges carrying signature -1
(an embedding is orientable when that set is empty, up to local switching).

Face tracing walks states ``(dart, flag)``.  Arriving at ``v`` along ``d``
with flag ``s``, the flag becomes ``t = s * sig(d)`` and the walk leaves
along the dart after ``rev(d)`` in v's rotation when ``t = +1``, before it
when ``t = -1``.  Every face shows up as two such orbits, one per direction;
only one of them is kept.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .graph_core import (
    Edge,
    Graph,
    components,
    girth,
    is_connected,
    is_finite_girth,
)


class EmbeddingError(ValueError):
    pass


class RotationBudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"rotation enumeration exceeded work budget {budget}")
        self.budget = budget


class DegenerateFaceError(EmbeddingError):
    """An edge borders a face of degree < 3 (only possible for K_2)."""


@dataclass(frozen=True)
class RotationSystem:
    order: tuple[tuple[int, ...], ...]
    negative: frozenset[Edge] = frozenset()

    @classmethod
    def from_lists(cls, order: Sequence[Sequence[int]], negative: Iterable[Edge] = ()) -> "RotationSystem":
        neg = frozenset((min(u, v), max(u, v)) for u, v in negative)
        return cls(tuple(tuple(row) for row in order), neg)

    def signature(self, u: int, v: int) -> int:
        return -1 if (min(u, v), max(u, v)) in self.negative else 1

    @property
    def is_orientable_labelling(self) -> bool:
        return not self.negative


@dataclass(frozen=True)
class FaceSet:
    # each face is its boundary walk as a tuple of (tail, head) steps
    faces: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.faces)

    def __len__(self) -> int:
        return len(self.faces)

    @cached_property
    def edge_sides(self) -> dict[Edge, tuple[int, int]]:
        """Degrees (m, m') of the faces on the two sides of every edge."""
        sides: dict[Edge, list[int]] = {}
        for face in self.faces:
            for u, v in face:
                sides.setdefault((min(u, v), max(u, v)), []).append(len(face))
        out = {}
        for e, degs in sides.items():
            if len(degs) != 2:
                raise EmbeddingError(f"edge {e} occurs {len(degs)} times on face boundaries")
            out[e] = (min(degs), max(degs))
        return out


class _Darts:
    """Dart arrays for a graph, shared by tracing and the search."""

    def __init__(self, g: Graph):
        self.g = g
        edges = g.edges()
        self.edge_index = {e: i for i, e in enumerate(edges)}
        nd = 2 * len(edges)
        self.tail = [0] * nd
        self.head = [0] * nd
        for i, (u, v) in enumerate(edges):
            self.tail[2 * i], self.head[2 * i] = u, v
            self.tail[2 * i + 1], self.head[2 * i + 1] = v, u
        self.nd = nd

    def dart(self, u: int, v: int) -> int:
        if u < v:
            return 2 * self.edge_index[(u, v)]
        return 2 * self.edge_index[(v, u)] + 1

    def compile(self, rot: RotationSystem) -> tuple[list[int], list[int], list[int]]:
        g = self.g
        if len(rot.order) != g.n:
            raise EmbeddingError("rotation system must list every vertex")
        nxt = [-1] * self.nd
        prv = [-1] * self.nd
        for v, row in enumerate(rot.order):
            if sorted(row) != list(g.adj[v]) or len(set(row)) != len(row):
                raise EmbeddingError(f"rotation at vertex {v} is not a cyclic order of its neighbours")
            out = [self.dart(v, u) for u in row]
            k = len(out)
            for i, d in enumerate(out):
                nxt[d] = out[(i + 1) % k]
                prv[d] = out[(i - 1) % k]
        for e in rot.negative:
            if e not in self.edge_index:
                raise EmbeddingError(f"signature given for non-edge {e}")
        sig = [1] * self.nd
        for e in rot.negative:
            i = self.edge_index[e]
            sig[2 * i] = sig[2 * i + 1] = -1
        return nxt, prv, sig


def _trace(nd: int, nxt: list[int], prv: list[int], sig: list[int]) -> list[list[int]]:
    # state index: 2*dart + (0 for flag +1, 1 for flag -1)
    consumed = bytearray(2 * nd)
    faces = []
    for flag_bit in (0, 1):
        for d0 in range(nd):
            start = 2 * d0 + flag_bit
            if consumed[start]:
                continue
            walk = []
            d, s = d0, 1 - 2 * flag_bit
            while True:
                state = 2 * d + (s < 0)
                consumed[state] = 1
                # reverse state: leave along rev(d) with flag -s*sig
                rs = -s * sig[d]
                consumed[2 * (d ^ 1) + (rs < 0)] = 1
                walk.append(d)
                t = s * sig[d]
                r = d ^ 1
                d = nxt[r] if t > 0 else prv[r]
                s = t
                if 2 * d + (s < 0) == start:
                    break
            faces.append(walk)
    return faces


def trace_faces(g: Graph, rot: RotationSystem) -> FaceSet:
    if not is_connected(g):
        raise EmbeddingError("face tracing needs a connected graph")
    darts = _Darts(g)
    nxt, prv, sig = darts.compile(rot)
    if g.m == 0:
        return FaceSet(((),))
    walks = _trace(darts.nd, nxt, prv, sig)
    return FaceSet(tuple(tuple((darts.tail[d], darts.head[d]) for d in w) for w in walks))


def orbit_faces(g: Graph, rot: RotationSystem) -> FaceSet:
    """Faces of an orientable rotation system as orbits of next-after-reverse.

    Independent of :func:`trace_faces`; signatures are ignored.
    """
    darts = _Darts(g)
    nxt, _, _ = darts.compile(RotationSystem(rot.order))
    seen = [False] * darts.nd
    faces = []
    for d0 in range(darts.nd):
        if seen[d0]:
            continue
        walk = []
        d = d0
        while not seen[d]:
            seen[d] = True
            walk.append((darts.tail[d], darts.head[d]))
            d = nxt[d ^ 1]
        faces.append(tuple(walk))
    return FaceSet(tuple(faces))


def euler_characteristic(g: Graph, rot: RotationSystem) -> int:
    return g.n - g.m + len(trace_faces(g, rot))


def edge_curvature(
    g: Graph, rot: RotationSystem, faces: FaceSet, e: Edge, strict: bool = True
) -> Fraction:
    """1/d(u) + 1/d(v) - 1 + 1/m + 1/m' - chi/|E| for the edge ``e = uv``.

    ``m <= m'`` are the degrees of the faces on the two sides of ``e``.  With
    ``strict`` a side of degree below 3 raises :class:`DegenerateFaceError`;
    otherwise the formula is evaluated as is.
    """
    u, v = min(e), max(e)
    if not g.has_edge(u, v):
        raise EmbeddingError(f"{e} is not an edge")
    m1, m2 = faces.edge_sides[(u, v)]
    if strict and m1 < 3:
        raise DegenerateFaceError(f"edge {(u, v)} borders a face of degree {m1}")
    chi = g.n - g.m + len(faces)
    return (
        Fraction(1, len(g.adj[u]))
        + Fraction(1, len(g.adj[v]))
        - 1
        + Fraction(1, m1)
        + Fraction(1, m2)
        - Fraction(chi, g.m)
    )


def curvatures(g: Graph, rot: RotationSystem) -> dict[Edge, Fraction]:
    faces = trace_faces(g, rot)
    return {e: edge_curvature(g, rot, faces, e) for e in g.edges()}


def curvature_sum(g: Graph, rot: RotationSystem) -> Fraction:
    if g.m == 0:
        raise EmbeddingError("curvature needs at least one edge")
    return sum(curvatures(g, rot).values(), Fraction(0))


def small_face_edges(faces: FaceSet) -> list[Edge]:
    """Edges with m or m' below 3."""
    return sorted(e for e, (m1, _) in faces.edge_sides.items() if m1 < 3)


# --- construction helpers -------------------------------------------------------

def default_rotation(g: Graph) -> RotationSystem:
    """Neighbours in increasing order at every vertex, all signatures +1."""
    return RotationSystem(g.adj)


def random_rotation(g: Graph, rng: random.Random, signatures: bool = False) -> RotationSystem:
    order = []
    for v in range(g.n):
        row = list(g.adj[v])
        rng.shuffle(row)
        order.append(tuple(row))
    negative = frozenset(e for e in g.edges() if signatures and rng.random() < 0.5)
    return RotationSystem(tuple(order), negative)


def planar_k4_rotation() -> RotationSystem:
    # vertex 3 at the centre of triangle 0-1-2, every vertex read counter-clockwise
    return RotationSystem(((1, 3, 2), (2, 3, 0), (0, 3, 1), (0, 1, 2)))


def parse_rotation(text: str) -> RotationSystem:
    """Parse ``v: n1 n2 ...`` lines plus optional ``sig u v -1`` lines."""
    rows: dict[int, tuple[int, ...]] = {}
    negative = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("sig"):
                _, u, v, s = line.split()
                if int(s) == -1:
                    negative.add((min(int(u), int(v)), max(int(u), int(v))))
                elif int(s) != 1:
                    raise ValueError("signature must be 1 or -1")
                continue
            head, _, rest = line.partition(":")
            v = int(head)
            if v in rows:
                raise ValueError(f"vertex {v} listed twice")
            rows[v] = tuple(int(x) for x in rest.split())
        except ValueError as exc:
            raise EmbeddingError(f"rotation line {lineno}: {exc}") from None
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise EmbeddingError("rotation must list vertices 0..n-1")
    return RotationSystem(tuple(rows[v] for v in range(n)), frozenset(negative))


def format_rotation(rot: RotationSystem) -> str:
    lines = [f"{v}: " + " ".join(map(str, row)) for v, row in enumerate(rot.order)]
    lines += [f"sig {u} {v} -1" for u, v in sorted(rot.negative)]
    return "\n".join(lines) + "\n"


def cyclic_orders(nbrs: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Every cyclic order of ``nbrs``, each listed once starting from ``nbrs[0]``."""
    if len(nbrs) <= 2:
        yield tuple(nbrs)
        return
    first = nbrs[0]
    for rest in permutations(nbrs[1:]):
        yield (first, *rest)


def all_rotation_systems(g: Graph, signatures: bool = False) -> Iterator[RotationSystem]:
    """Plain enumeration of every rotation system (and signature set); small graphs only."""
    edges = g.edges()
    sign_choices = product((False, True), repeat=len(edges)) if signatures else [(False,) * len(edges)]
    orders = list(product(*(list(cyclic_orders(g.adj[v])) for v in range(g.n))))
    for signs in sign_choices:
        neg = frozenset(e for e, s in zip(edges, signs) if s)
        for order in orders:
            yield RotationSystem(order, neg)


def rotation_count(g: Graph) -> int:
    return math.prod(math.factorial(max(len(row) - 1, 0)) for row in g.adj)


# --- maximum Euler characteristic ---------------------------------------------------

def _two_core(g: Graph) -> tuple[Graph, list[int]]:
    """Strip degree-1 vertices repeatedly; each removal leaves n - m + f unchanged.

    Returns the core and, for each core vertex, its id in ``g``.
    """
    alive = [True] * g.n
    deg = [len(row) for row in g.adj]
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for u in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] <= 1:
                    stack.append(u)
    keep = [v for v in range(g.n) if alive[v]]
    local = {v: i for i, v in enumerate(keep)}
    core = Graph(len(keep), tuple(tuple(local[u] for u in g.adj[v] if alive[u]) for v in keep))
    return core, keep


class _SearchDone(Exception):
    pass


class _EmbeddingSearch:
    """Depth-first search for an embedding with as many faces as possible.

    Faces are traced one at a time.  Whenever the walk reaches a vertex where
    the needed rotation link (or the signature of a cotree edge) is still
    open, the search branches over the choices that keep every vertex's
    partial rotation extendable to a single cycle.  A closed face is final,
    and every face still to come uses at least ``min_face`` of the remaining
    edge-sides, which bounds the Euler characteristic of any completion.
    """

    def __init__(self, g: Graph, signed: bool, budget: int):
        self.g = g
        self.darts = _Darts(g)
        self.signed = signed
        self.budget = budget
        self.work = 0
        gi = girth(g)
        self.min_face = int(gi) if is_finite_girth(gi) else 3
        nd = self.darts.nd
        self.out = [[self.darts.dart(v, u) for u in g.adj[v]] for v in range(g.n)]
        self.succ = [-1] * nd
        self.pred = [-1] * nd
        # fragment endpoints of each vertex's partial rotation
        self.frag_start = list(range(nd))
        self.frag_end = list(range(nd))
        self.links = [0] * g.n
        # per edge: 0 undecided, +1 / -1 decided; tree edges are fixed to +1
        tree = self._tree_edges() if signed else set(g.edges())
        self.sig = [1 if e in tree else 0 for e in g.edges()]
        # state 2*d + b: leaving along dart d with flag +1 (b=0) or -1 (b=1)
        self.consumed = bytearray(2 * nd)
        if not signed:
            # without signatures every face is found among the flag +1 states
            for d in range(nd):
                self.consumed[2 * d + 1] = 1
        self.trail: list[tuple[list, int, int]] = []
        self.walk: list[int] = []
        self.closed = 0
        self.used = 0
        self.best = -(10**9)
        self.best_rotation: RotationSystem | None = None
        self.ceiling = self._ceiling()

    def _tree_edges(self) -> set[Edge]:
        g = self.g
        seen = {0}
        tree = set()
        stack = [0]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    tree.add((min(x, y), max(x, y)))
                    stack.append(y)
        return tree

    def _ceiling(self) -> int:
        g = self.g
        top = min(2, g.n - g.m + (2 * g.m) // self.min_face)
        if not self.signed:
            top -= top % 2
        return top

    def run(self) -> tuple[int, RotationSystem]:
        try:
            self._open_face()
        except _SearchDone:
            pass
        return self.best, self.best_rotation

    # trail-based assignment so every branch can be undone exactly
    def _set(self, arr: list, i: int, value: int) -> None:
        self.trail.append((arr, i, arr[i]))
        arr[i] = value

    def _undo(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            arr, i, old = trail.pop()
            arr[i] = old

    def _can_link(self, a: int, b: int) -> bool:
        if self.succ[a] >= 0 or self.pred[b] >= 0:
            return False
        if self.frag_start[a] == b:
            # closes the cycle: only allowed once it covers the whole vertex
            v = self.darts.tail[a]
            return self.links[v] == len(self.out[v]) - 1
        return True

    def _link(self, a: int, b: int) -> None:
        s, e = self.frag_start[a], self.frag_end[b]
        self._set(self.succ, a, b)
        self._set(self.pred, b, a)
        v = self.darts.tail[a]
        self._set(self.links, v, self.links[v] + 1)
        if s != b:
            self._set(self.frag_end, s, e)
            self._set(self.frag_start, e, s)

    def _bound(self, length: int) -> int:
        g = self.g
        rem = 2 * g.m - self.used
        faces = self.closed + 1 + (rem - max(length, self.min_face)) // self.min_face
        chi = g.n - g.m + faces
        if not self.signed:
            chi -= chi % 2
        return chi

    def _tick(self) -> None:
        self.work += 1
        if self.work > self.budget:
            raise RotationBudgetExceeded(self.budget)

    def _open_face(self) -> None:
        consumed = self.consumed
        start = next((i for i in range(len(consumed)) if not consumed[i]), -1)
        if start < 0:
            chi = self.g.n - self.g.m + self.closed
            if chi > self.best:
                self.best = chi
                self.best_rotation = self._rotation()
                if chi >= self.ceiling:
                    raise _SearchDone
            return
        self._set(consumed, start, 1)
        self.walk.append(start)
        self._extend(start, start >> 1, 1 - 2 * (start & 1))
        self.walk.pop()

    def _extend(self, start: int, d: int, s: int) -> None:
        """Continue the open face whose last step left along ``d`` with flag ``s``."""
        self._tick()
        if self._bound(len(self.walk)) <= self.best:
            return
        e = d >> 1
        if self.sig[e] == 0:
            for value in (1, -1):
                mark = len(self.trail)
                self._set(self.sig, e, value)
                self._extend(start, d, s)
                self._undo(mark)
            return
        t = s * self.sig[e]
        r = d ^ 1
        forced = self.succ[r] if t > 0 else self.pred[r]
        if forced >= 0:
            self._step(start, forced, t, None)
            return
        v = self.darts.head[d]
        home = self.darts.tail[start >> 1]
        options = [b for b in self.out[v] if (self._can_link(r, b) if t > 0 else self._can_link(b, r))]
        # darts leading back to where the face started first: short faces close sooner
        options.sort(key=lambda b: (self.darts.head[b] != home, b))
        for b in options:
            self._step(start, b, t, (r, b) if t > 0 else (b, r))

    def _step(self, start: int, b: int, t: int, link: tuple[int, int] | None) -> None:
        mark = len(self.trail)
        if link is not None:
            self._link(*link)
        state = 2 * b + (t < 0)
        if state == start:
            self._close_face()
        elif not self.consumed[state]:
            self._set(self.consumed, state, 1)
            self.walk.append(state)
            self._extend(start, b, t)
            self.walk.pop()
        self._undo(mark)

    def _close_face(self) -> None:
        mark = len(self.trail)
        length = len(self.walk)
        if self.signed:
            for state in self.walk:
                d, s = state >> 1, 1 - 2 * (state & 1)
                rs = -s * self.sig[d >> 1]
                self._set(self.consumed, 2 * (d ^ 1) + (rs < 0), 1)
        saved_walk = self.walk
        self.walk = []
        self.closed += 1
        self.used += length
        self._open_face()
        self.closed -= 1
        self.used -= length
        self.walk = saved_walk
        self._undo(mark)

    def _rotation(self) -> RotationSystem:
        order = []
        for v in range(self.g.n):
            first = self.out[v][0]
            row = [self.darts.head[first]]
            d = self.succ[first]
            while d != first:
                row.append(self.darts.head[d])
                d = self.succ[d]
            order.append(tuple(row))
        negative = frozenset(e for e, s in zip(self.g.edges(), self.sig) if s < 0)
        return RotationSystem(tuple(order), negative)


def max_euler_characteristic(
    g: Graph,
    budget: int = 1_000_000,
    allow_signatures: bool = False,
    return_rotation: bool = False,
):
    """Largest Euler characteristic over all rotation systems of a connected graph.

    With ``allow_signatures=False`` only orientable embeddings are searched
    and the answer is ``2 - 2*genus``.  ``budget`` caps the number of search
    nodes; :class:`RotationBudgetExceeded` is raised past it.  Signatures on a
    spanning tree are fixed to +1 (any embedding can be switched to that form).
    """
    if not is_connected(g):
        raise EmbeddingError("max_euler_characteristic needs a connected graph")
    if budget < 1:
        raise ValueError("budget must be positive")
    core, keep = _two_core(g)
    if core.n == 0:
        chi, rot = 2, default_rotation(g)
    else:
        chi, core_rot = _EmbeddingSearch(core, allow_signatures, budget).run()
        rot = _lift_rotation(g, keep, core_rot)
    return (chi, rot) if return_rotation else chi


def _lift_rotation(g: Graph, keep: list[int], rot: RotationSystem) -> RotationSystem:
    """Extend a rotation of the 2-core to ``g``; pendant trees go in any corner."""
    order = [tuple(row) for row in g.adj]
    for i, v in enumerate(keep):
        core_row = [keep[u] for u in rot.order[i]]
        extra = [u for u in g.adj[v] if u not in core_row]
        order[v] = tuple(core_row + extra)
    negative = frozenset((keep[u], keep[v]) for u, v in rot.negative)
    return RotationSystem(tuple(order), negative)


def component_chis(g: Graph, budget: int, allow_signatures: bool = False) -> list[int]:
    """Maximum Euler characteristic of each component that has an edge."""
    return [
        max_euler_characteristic(c.graph, budget, allow_signatures)
        for c in components(g)
        if c.graph.m > 0
    ]
