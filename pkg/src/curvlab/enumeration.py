"""Exhaustive small-graph enumeration up to isomorphism.

Graphs are generated level by level: every graph on k+1 vertices arises
from some graph on k vertices by appending a vertex with an arbitrary
neighborhood, so extending all k-vertex representatives by all 2^k
neighborhoods and deduplicating yields all isomorphism classes.
Deduplication buckets candidates by a color-refinement invariant and
settles ties with a backtracking isomorphism test, which also separates
refinement-equivalent pairs such as C3+C3 versus C6.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, GraphError, from_edge_list, is_connected

# counts of graphs on n=1.. vertices, used as self-checks in the tests:
# all graphs      1, 2, 4, 11, 34, 156, 1044, 12346
# connected       1, 1, 2, 6, 21, 112, 853, 11117
MAX_ENUMERATION_N = 9


def refinement_invariant(g: Graph) -> tuple:
    """Canonical color-refinement signature, equal for isomorphic graphs.

    Vertices start with their degree as color; each round recolors by the
    sorted multiset of neighbor colors, with color ids re-indexed by sorted
    signature so the result is labeling-independent.  The invariant is the
    stable color histogram together with the sorted edge color pairs.
    """
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in g.adjacency[v])))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            break
        colors = new
    hist = tuple(sorted(colors))
    edge_colors = tuple(
        sorted((min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in g.edges())
    )
    return (g.n, g.m, hist, edge_colors)


def _stable_colors(g: Graph) -> list[int]:
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in g.adjacency[v])))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism by backtracking over color-compatible assignments."""
    if g.n != h.n or g.m != h.m:
        return False
    if refinement_invariant(g) != refinement_invariant(h):
        return False
    cg, ch = _stable_colors(g), _stable_colors(h)
    # assign rare-colored, high-degree vertices first
    color_count = {c: cg.count(c) for c in set(cg)}
    order = sorted(range(g.n), key=lambda v: (color_count[cg[v]], -g.degree(v), v))
    targets: dict[int, list[int]] = {}
    for v in range(h.n):
        targets.setdefault(ch[v], []).append(v)

    mapping: dict[int, int] = {}
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in targets.get(cg[v], ()):
            if used[w]:
                continue
            ok = True
            for u in g.adjacency[v]:
                if u in mapping and not h.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                # forward checks put mapped neighbors of v inside N(w); equal
                # counts then force non-edges to map to non-edges as well
                mapped_nbrs = sum(1 for u in g.adjacency[v] if u in mapping)
                back_nbrs = sum(1 for u2 in h.adjacency[w] if used[u2])
                if mapped_nbrs != back_nbrs:
                    ok = False
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    return extend(0)


def _extensions(g: Graph) -> list[Graph]:
    """All graphs obtained by adding one vertex with any neighborhood."""
    out = []
    base_edges = g.edges()
    for mask in range(1 << g.n):
        new_edges = [(v, g.n) for v in range(g.n) if (mask >> v) & 1]
        out.append(from_edge_list(g.n + 1, base_edges + new_edges))
    return out


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        raise GraphError(f"enumeration needs n >= 1, got {n}")
    if n > MAX_ENUMERATION_N:
        raise GraphError(
            f"enumeration capped at {MAX_ENUMERATION_N} vertices, got {n}"
        )
    if n == 1:
        return (from_edge_list(1, []),)
    buckets: dict[tuple, list[Graph]] = {}
    for g in all_graphs(n - 1):
        for cand in _extensions(g):
            key = refinement_invariant(cand)
            bucket = buckets.setdefault(key, [])
            if not any(is_isomorphic(cand, rep) for rep in bucket):
                bucket.append(cand)
    reps = [g for bucket in buckets.values() for g in bucket]
    reps.sort(key=lambda g: (g.m, g.adjacency))
    return tuple(reps)


def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on exactly n vertices, one per isomorphism class."""
    return tuple(g for g in all_graphs(n) if is_connected(g))


def connected_graphs_upto(max_n: int):
    """Yield (label, graph) for all connected graphs with 1 <= n <= max_n."""
    for n in range(1, max_n + 1):
        for i, g in enumerate(connected_graphs(n)):
            yield f"n{n}#{i}", g
