"""Maximum matching by blossom contraction, with exact brute-force oracles.

The main routine is the classic O(n^3) augmenting-path search for general
graphs: a BFS forest of even vertices, odd cycles contracted on the fly by
rebasing every vertex of the blossom onto the cycle's base.  Roots and
neighbors are scanned in increasing index order, so results are
deterministic for a fixed vertex labeling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError


@dataclass(frozen=True)
class Matching:
    """A set of mutually disjoint edges; perfect when it covers every vertex."""

    edges: tuple[tuple[int, int], ...]
    is_perfect: bool

    @property
    def size(self) -> int:
        return len(self.edges)

    def verify(self, g: Graph) -> bool:
        used = set()
        for u, v in self.edges:
            if u == v or not g.has_edge(u, v) or u in used or v in used:
                return False
            used.update((u, v))
        return self.is_perfect == (len(used) == g.n)


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching via augmenting paths with blossoms."""
    n = g.n
    match = [-1] * n

    def find_augmenting_path(root: int) -> None:
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        in_blossom = [False] * n
        q = deque([root])
        in_queue[root] = True

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_blossom(v: int, anchor: int, child: int) -> None:
            # walk from v up to the cycle base, flagging blossom vertices and
            # orienting parent pointers so augmentation can pass through
            while base[v] != anchor:
                u = match[v]
                in_blossom[base[v]] = True
                in_blossom[base[u]] = True
                parent[v] = child
                child = u
                v = parent[u]

        def contract(u: int, v: int) -> None:
            anchor = lca(u, v)
            for w in range(n):
                in_blossom[w] = False
            mark_blossom(u, anchor, v)
            mark_blossom(v, anchor, u)
            for w in range(n):
                if in_blossom[base[w]]:
                    base[w] = anchor
                    if not in_queue[w]:
                        in_queue[w] = True
                        q.append(w)

        def augment(v: int) -> None:
            while v != -1:
                pv = match[parent[v]]
                match[v] = parent[v]
                match[parent[v]] = v
                v = pv

        while q:
            v = q.popleft()
            for to in g.adjacency[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    contract(v, to)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        augment(to)
                        return
                    if not in_queue[match[to]]:
                        in_queue[match[to]] = True
                        q.append(match[to])

    for v in range(n):
        if match[v] == -1:
            find_augmenting_path(v)

    edges = tuple(sorted((v, match[v]) for v in range(n) if v < match[v]))
    return Matching(edges, 2 * len(edges) == n)


def matching_bruteforce(g: Graph) -> int:
    """Exact maximum matching size by branching on the lowest active vertex.

    Capped at 24 edges; each step either leaves the chosen vertex unmatched
    or matches it to one of its still-active neighbors.
    """
    if g.m > 24:
        raise GraphError(f"brute-force matching capped at 24 edges, got {g.m}")

    adjacency = g.adjacency

    def best(active: frozenset) -> int:
        v = None
        for u in sorted(active):
            if any(w in active for w in adjacency[u]):
                v = u
                break
        if v is None:
            return 0
        without = best(active - {v})
        with_match = 0
        for w in adjacency[v]:
            if w in active:
                with_match = max(with_match, 1 + best(active - {v, w}))
        return max(without, with_match)

    return best(frozenset(range(g.n)))


def tutte_violation(g: Graph) -> tuple[int, ...] | None:
    """A vertex set S with more than |S| odd components in G - S, if any.

    Such a set certifies that no perfect matching exists.  Subsets are
    scanned in increasing bitmask order; the first violator is returned as
    a sorted tuple, or None when the graph satisfies the odd-component
    condition everywhere.
    """
    if g.n > 16:
        raise GraphError(f"Tutte scan capped at 16 vertices, got {g.n}")
    for mask in range(1 << g.n):
        removed = {v for v in range(g.n) if (mask >> v) & 1}
        odd = 0
        seen = set(removed)
        for s in range(g.n):
            if s in seen:
                continue
            size = 0
            stack = [s]
            seen.add(s)
            while stack:
                u = stack.pop()
                size += 1
                for w in g.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            odd += size % 2
        if odd > len(removed):
            return tuple(sorted(removed))
    return None
