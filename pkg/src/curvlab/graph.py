"""Immutable simple graphs, lazy neighbor oracles, and 2-ball extraction.

Finite graphs use canonical integer vertex indices 0..n-1 with sorted
adjacency tuples.  Infinite (but locally finite) graphs are exposed only
through :class:`NeighborOracle`; whole-graph operations reject oracles.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph constructions or out-of-contract queries."""


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    Invariants: no self-loops, no duplicate neighbors, symmetric adjacency,
    every neighbor index in [0, n).  Instances are immutable and hashable.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def as_oracle(self) -> "NeighborOracle":
        return NeighborOracle(lambda v: self.adjacency[v])


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list, deduplicating and symmetrizing.

    Raises GraphError for self-loops or endpoints outside [0, n).
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph on `vertices`, relabeled to 0..len-1 in given order."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[u], index[v])
        for u in vertices
        for v in g.adjacency[u]
        if u < v and v in index
    ]
    return from_edge_list(len(vertices), edges)


class NeighborOracle:
    """Lazy adjacency interface for (possibly infinite) locally finite graphs.

    Vertex identifiers are opaque hashable, comparable values.  The wrapped
    function must return a finite iterable of neighbors and be symmetric;
    symmetry is not enforced here but is checked by tests on sampled balls.
    """

    def __init__(self, neighbor_fn: Callable[[Hashable], Iterable[Hashable]]):
        self._fn = neighbor_fn

    def neighbors(self, v: Hashable) -> tuple:
        return tuple(self._fn(v))

    def degree(self, v: Hashable) -> int:
        return len(self.neighbors(v))


def oracle_of(g: Graph) -> NeighborOracle:
    return g.as_oracle()


@dataclass(frozen=True)
class BallMap:
    """Vertex bookkeeping for an extracted ball.

    `vertices[i]` is the original identifier of ball-graph index i and
    `sphere[i]` its distance from the center (0, 1, or 2).  Index 0 is the
    center, sphere-1 vertices follow in sorted order, then sphere-2 sorted.
    """

    vertices: tuple
    sphere: tuple[int, ...]
    index: dict = field(hash=False, compare=False, default_factory=dict)

    def sphere_vertices(self, k: int) -> tuple:
        return tuple(v for v, s in zip(self.vertices, self.sphere) if s == k)


def ball(o: NeighborOracle, x: Hashable, r: int) -> tuple[Graph, BallMap]:
    """Induced subgraph on the radius-r ball around x, r in {1, 2}.

    The center maps to index 0, sphere-1 vertices next (sorted), sphere-2
    last (sorted); this ordering is the basis contract for curvature forms.
    """
    if r not in (1, 2):
        raise GraphError(f"ball radius must be 1 or 2, got {r}")
    n1 = sorted(set(o.neighbors(x)) - {x})
    spheres = [[x], n1]
    if r == 2:
        seen = set(n1) | {x}
        n2 = sorted({z for y in n1 for z in o.neighbors(y)} - seen)
        spheres.append(n2)
    ordered = [v for sph in spheres for v in sph]
    index = {v: i for i, v in enumerate(ordered)}
    edges = []
    for v in ordered:
        for w in o.neighbors(v):
            if w in index and index[v] < index[w]:
                edges.append((index[v], index[w]))
    sphere_tags = tuple(s for s, sph in enumerate(spheres) for _ in sph)
    bmap = BallMap(tuple(ordered), sphere_tags, index)
    return from_edge_list(len(ordered), edges), bmap


def distance_matrix(g: Graph) -> list[list[float]]:
    """All-pairs BFS distances; math.inf where unreachable."""
    dist = [[math.inf] * g.n for _ in range(g.n)]
    for s in range(g.n):
        row = dist[s]
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.adjacency[u]:
                if row[v] is math.inf or row[v] > row[u] + 1:
                    row[v] = row[u] + 1
                    q.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    q = deque([0])
    while q:
        u = q.popleft()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                q.append(v)
    return len(seen) == g.n


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    q.append(v)
        comps.append(sorted(comp))
    return comps


def girth(g: Graph) -> float:
    """Length of a shortest cycle; math.inf for forests.

    For each edge (u,v), a shortest u-v path avoiding that edge plus the
    edge itself is a shortest cycle through it; minimizing over edges is
    exact because every cycle contains an edge.
    """
    best = math.inf
    for u, v in g.edges():
        # BFS from u to v in g minus the edge (u,v)
        dist = {u: 0}
        q = deque([u])
        found = None
        while q and found is None:
            a = q.popleft()
            if dist[a] + 1 >= best:
                break
            for b in g.adjacency[a]:
                if a == u and b == v:
                    continue
                if b not in dist:
                    dist[b] = dist[a] + 1
                    if b == v:
                        found = dist[b]
                        break
                    q.append(b)
        if found is not None:
            best = min(best, found + 1)
    return best


@dataclass(frozen=True)
class StructureSummary:
    min_degree: int
    max_degree: int
    is_regular: bool
    is_connected: bool
    girth: float
    distances: tuple


def structure_queries(g: Graph) -> StructureSummary:
    """Basic exact structure data: degrees, connectivity, girth, distances."""
    if g.n == 0:
        return StructureSummary(0, 0, True, True, math.inf, ())
    degs = [g.degree(v) for v in range(g.n)]
    return StructureSummary(
        min_degree=min(degs),
        max_degree=max(degs),
        is_regular=min(degs) == max(degs),
        is_connected=is_connected(g),
        girth=girth(g),
        distances=tuple(tuple(row) for row in distance_matrix(g)),
    )
