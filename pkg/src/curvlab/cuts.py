"""Edge-connectivity, minimum-cut certificates, and star-cut classification.

The global minimum cut uses Stoer-Wagner with unit weights and lowest-index
tie-breaking, so certificates are reproducible.  Restricted edge
connectivity (both cut sides of size at least two) runs unit-capacity
max-flows between contracted vertex pairs; the pair enumeration is reduced
to a provably sufficient family, see `restricted_edge_connectivity`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, connected_components, is_connected


@dataclass(frozen=True)
class CutCertificate:
    """A vertex bipartition witnessing a cut value.

    `cut_edges` is exactly the set of edges with one end in `side_L`,
    and `value` their count.
    """

    side_L: frozenset
    cut_edges: tuple[tuple[int, int], ...]
    value: int

    def verify(self, g: Graph) -> bool:
        """Recompute the cut from side_L and compare with the stored data."""
        if not (0 < len(self.side_L) < g.n):
            return False
        crossing = tuple(
            (u, v) for u, v in g.edges() if (u in self.side_L) != (v in self.side_L)
        )
        return crossing == tuple(sorted(self.cut_edges)) and len(crossing) == self.value


def _certificate(g: Graph, side: set[int]) -> CutCertificate:
    side_L = frozenset(side)
    cut = tuple((u, v) for u, v in g.edges() if (u in side_L) != (v in side_L))
    return CutCertificate(side_L, cut, len(cut))


def edge_connectivity(g: Graph) -> tuple[int, CutCertificate | None]:
    """Global minimum cut value with an achieving certificate.

    Single-vertex graphs return 0 with no certificate (no bipartition
    exists); disconnected graphs return 0 with a component as side_L.
    """
    if g.n == 0:
        raise GraphError("edge connectivity of the empty graph is undefined")
    if g.n == 1:
        return 0, None
    if not is_connected(g):
        return 0, _certificate(g, set(connected_components(g)[0]))
    # Stoer-Wagner with unit weights; supernodes carry their merged members.
    members = {v: [v] for v in range(g.n)}
    weight = {v: dict.fromkeys(g.adjacency[v], 1) for v in range(g.n)}
    best_value, best_side = None, None
    while len(members) > 1:
        # maximum adjacency ordering from the smallest active vertex
        active = sorted(members)
        start = active[0]
        in_a = {start}
        w = dict.fromkeys(active, 0)
        for u, c in weight[start].items():
            w[u] = c
        order = [start]
        while len(in_a) < len(active):
            nxt = max((v for v in active if v not in in_a), key=lambda v: (w[v], -v))
            order.append(nxt)
            in_a.add(nxt)
            for u, c in weight[nxt].items():
                if u not in in_a:
                    w[u] += c
        s, t = order[-2], order[-1]
        cut_of_phase = w[t]
        if best_value is None or cut_of_phase < best_value:
            best_value, best_side = cut_of_phase, set(members[t])
        # merge t into s
        members[s].extend(members.pop(t))
        wt = weight.pop(t)
        for u, c in wt.items():
            if u == s:
                continue
            weight[u].pop(t, None)
            weight[u][s] = weight[u].get(s, 0) + c
            weight[s][u] = weight[u][s]
        weight[s].pop(t, None)
    return best_value, _certificate(g, best_side)


def min_cut_bruteforce(g: Graph) -> tuple[int, list[CutCertificate]]:
    """All minimum cuts by enumerating the 2^(n-1) bipartitions.

    Certificates are canonicalized so side_L contains vertex 0.
    """
    if g.n > 20:
        raise GraphError(f"brute-force min cut capped at 20 vertices, got {g.n}")
    if g.n < 2:
        raise GraphError("need at least two vertices for a cut")
    edges = g.edges()
    best = None
    cuts: list[frozenset] = []
    for mask in range(2 ** (g.n - 1)):
        side = {0} | {v for v in range(1, g.n) if (mask >> (v - 1)) & 1}
        if len(side) == g.n:
            continue
        value = sum(1 for u, v in edges if (u in side) != (v in side))
        if best is None or value < best:
            best, cuts = value, [frozenset(side)]
        elif value == best:
            cuts.append(frozenset(side))
    return best, [_certificate(g, set(side)) for side in cuts]


def _max_flow(g: Graph, source: set[int], sink: set[int]):
    """Unit-capacity max-flow between contracted vertex sets (Edmonds-Karp).

    Returns (flow_value, side) where `side` is the source side of a
    minimum cut, expanded back to original vertices.
    """
    s, t = g.n, g.n + 1
    cap: list[dict[int, int]] = [dict() for _ in range(g.n + 2)]

    def add(u, v, c):
        cap[u][v] = cap[u].get(v, 0) + c
        cap[v].setdefault(u, 0)

    contract = {v: s for v in source} | {v: t for v in sink}
    for u, v in g.edges():
        cu, cv = contract.get(u, u), contract.get(v, v)
        if cu == cv:
            continue
        add(cu, cv, 1)
        add(cv, cu, 1)
    flow = 0
    while True:
        parent = {s: None}
        q = deque([s])
        while q and t not in parent:
            u = q.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    q.append(v)
        if t not in parent:
            side = {v for v in range(g.n) if contract.get(v, v) in parent}
            return flow, side
        v = t
        while parent[v] is not None:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1


def restricted_edge_connectivity(g: Graph) -> tuple[float, CutCertificate | None]:
    """Minimum cut over bipartitions with both sides of size at least two.

    A minimum such cut has each side either connected (hence containing an
    edge, and an edge at any prescribed crossing vertex) or equal to a
    non-adjacent vertex pair, whose cut value is the degree sum.  It is
    therefore enough to run contracted max-flows from a fixed anchor edge
    to every disjoint edge, between edges at the two endpoints of the
    anchor, and to scan non-adjacent pairs directly.
    """
    if g.n < 4:
        raise GraphError(f"restricted edge connectivity needs n >= 4, got {g.n}")
    if not is_connected(g):
        return _restricted_disconnected(g)

    best: float = float("inf")
    best_side: set[int] | None = None

    def consider(value, side):
        nonlocal best, best_side
        if value < best:
            best, best_side = value, side

    # sides that are a non-adjacent vertex pair
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if w not in g.adjacency[u]:
                consider(g.degree(u) + g.degree(w), {u, w})

    edges = g.edges()
    if edges:
        a, b = edges[0]
        for f in edges:
            if a in f or b in f:
                continue
            flow, side = _max_flow(g, {a, b}, set(f))
            consider(flow, side)
        for fa in ((a, c) for c in g.adjacency[a] if c != b):
            for fb in ((b, c) for c in g.adjacency[b] if c != a):
                if set(fa) & set(fb):
                    continue
                flow, side = _max_flow(g, set(fa), set(fb))
                consider(flow, side)

    if best_side is None:
        return float("inf"), None
    return int(best), _certificate(g, best_side)


def _restricted_disconnected(g: Graph) -> tuple[float, CutCertificate | None]:
    """Restricted cut of a disconnected graph with n >= 4.

    Whole components usually split into two groups of size >= 2 for a cut
    of 0; the only exception is one isolated vertex plus one component on
    n-1 vertices, where the optimum is that component's own minimum cut
    (taken with the larger side on the singleton's side of the partition).
    """
    comps = connected_components(g)
    for c in comps:
        if 2 <= len(c) <= g.n - 2:
            return 0, _certificate(g, set(c))
    if all(len(c) == 1 for c in comps):
        return 0, _certificate(g, set(comps[0] + comps[1]))
    # exactly one isolated vertex plus one component on n-1 vertices
    iso = comps[0] if len(comps[0]) == 1 else comps[1]
    big = comps[1] if len(comps[0]) == 1 else comps[0]
    sub = Graph(
        len(big),
        tuple(
            tuple(big.index(w) for w in g.adjacency[v] if w in big) for v in big
        ),
    )
    lam, cert = edge_connectivity(sub)
    side = set(cert.side_L)
    if len(big) - len(side) < 2:
        side = set(range(len(big))) - side
    original = {big[i] for i in side} | set(iso)
    return lam, _certificate(g, original)


@dataclass(frozen=True)
class CutClassification:
    stars_only: bool
    witness: CutCertificate | None


def classify_min_cuts(g: Graph) -> CutClassification:
    """Decide whether every minimum cut isolates a single vertex.

    For n <= 3 every bipartition has a singleton side, so the answer is
    trivially yes.  Otherwise star cuts are optimal iff the connectivity
    equals the minimum degree and no both-sides->=2 partition matches it;
    the witness is a non-star minimum cut whenever one exists.
    """
    if g.n < 2:
        raise GraphError("cut classification needs at least two vertices")
    if not is_connected(g):
        raise GraphError("cut classification requires a connected graph")
    if g.n <= 3:
        return CutClassification(True, None)
    lam, cert = edge_connectivity(g)
    delta = min(g.degree(v) for v in range(g.n))
    if lam < delta:
        # certificate cannot be a star: a singleton side would cost >= delta
        return CutClassification(False, cert)
    lam_r, cert_r = restricted_edge_connectivity(g)
    if lam_r <= lam:
        return CutClassification(False, cert_r)
    return CutClassification(True, None)
