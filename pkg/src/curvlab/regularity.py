"""Regularity detection, the closed-form curvature of amply regular graphs,
diamond detection, and the two-sphere partition inequalities.

A graph is edge-regular (n, d, alpha) when it is d-regular and every
adjacent pair has exactly alpha common neighbors, and amply regular
(d, alpha, beta) when additionally every pair at distance two has exactly
beta common neighbors.  Complete and empty graphs are excluded from the
amply regular class, as are graphs with no distance-two pair (beta is then
unwitnessed).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, GraphError, ball, induced_subgraph


@dataclass(frozen=True)
class RegularityClass:
    """Detection outcome: one of not_regular, regular, edge_regular,
    amply_regular, with parameters where defined and a diagnostic naming
    the first pair that blocked the next-stronger class."""

    kind: str
    n: int | None = None
    d: int | None = None
    alpha: int | None = None
    beta: int | None = None
    diagnostic: str | None = None

    @property
    def is_regular(self) -> bool:
        return self.kind in ("regular", "edge_regular", "amply_regular")

    @property
    def is_edge_regular(self) -> bool:
        return self.kind in ("edge_regular", "amply_regular")

    @property
    def is_amply_regular(self) -> bool:
        return self.kind == "amply_regular"


def _common_neighbors(g: Graph, u: int, v: int) -> int:
    return len(set(g.adjacency[u]) & set(g.adjacency[v]))


def detect_regularity(g: Graph) -> RegularityClass:
    if g.n == 0:
        return RegularityClass("regular", n=0, d=0)
    degs = [g.degree(v) for v in range(g.n)]
    d = degs[0]
    for v, dv in enumerate(degs):
        if dv != d:
            return RegularityClass(
                "not_regular", n=g.n, diagnostic=f"deg({0})={d} but deg({v})={dv}"
            )
    if g.m == 0:
        return RegularityClass("regular", n=g.n, d=0, diagnostic="empty graph")
    alpha = None
    for u, v in g.edges():
        c = _common_neighbors(g, u, v)
        if alpha is None:
            alpha = c
        elif c != alpha:
            return RegularityClass(
                "regular",
                n=g.n,
                d=d,
                diagnostic=f"edge (0-based) ({u},{v}) has {c} common neighbors, first edge has {alpha}",
            )
    if d == g.n - 1:
        return RegularityClass(
            "edge_regular", n=g.n, d=d, alpha=alpha, diagnostic="complete graph"
        )
    # distance-two pairs via neighbor-of-neighbor expansion
    beta = None
    for x in range(g.n):
        nbrs = set(g.adjacency[x])
        dist2 = {z for y in g.adjacency[x] for z in g.adjacency[y]} - nbrs - {x}
        for z in dist2:
            if z < x:
                continue
            c = _common_neighbors(g, x, z)
            if beta is None:
                beta = c
            elif c != beta:
                return RegularityClass(
                    "edge_regular",
                    n=g.n,
                    d=d,
                    alpha=alpha,
                    diagnostic=f"pair ({x},{z}) at distance 2 has {c} common neighbors, first pair has {beta}",
                )
    if beta is None:
        return RegularityClass(
            "edge_regular",
            n=g.n,
            d=d,
            alpha=alpha,
            diagnostic="no distance-2 pair; beta unwitnessed",
        )
    return RegularityClass("amply_regular", n=g.n, d=d, alpha=alpha, beta=beta)


def local_graph_spectrum(g: Graph, x: int) -> list[float]:
    """Eigenvalues (ascending) of the adjacency matrix of the subgraph
    induced by the neighbors of x."""
    nbrs = g.adjacency[x]
    if not nbrs:
        raise GraphError(f"vertex {x} is isolated; local graph is empty")
    local = induced_subgraph(g, nbrs)
    a = np.zeros((local.n, local.n))
    for u, v in local.edges():
        a[u, v] = a[v, u] = 1.0
    return [float(t) for t in np.linalg.eigvalsh(a)]


def arg_curvature_formula(
    d: int, alpha: int, beta: int, local_spectrum: Sequence[float]
) -> float:
    """Closed-form vertex curvature of an amply regular graph:
    2 + alpha/2 + min(0, (2d(beta-2) - alpha^2)/(2 beta)
                         + (2/beta) min over spectrum of (lam - alpha/2)^2).
    """
    if beta < 1:
        raise GraphError(f"formula requires beta >= 1, got {beta}")
    if not local_spectrum:
        raise GraphError("local spectrum must be nonempty")
    inner = (2.0 * d * (beta - 2) - alpha * alpha) / (2.0 * beta)
    inner += (2.0 / beta) * min((lam - alpha / 2.0) ** 2 for lam in local_spectrum)
    return 2.0 + alpha / 2.0 + min(0.0, inner)


def contains_diamond(g: Graph) -> tuple[int, int, int, int] | None:
    """A K4-minus-an-edge subgraph witness (c, d, a, b), or None.

    Present exactly when some edge (c, d) has two common neighbors a, b;
    subgraph (not induced) containment, so K4 counts.
    """
    for c, dd in g.edges():
        common = sorted(set(g.adjacency[c]) & set(g.adjacency[dd]))
        if len(common) >= 2:
            return (c, dd, common[0], common[1])
    return None


def contains_induced_diamond(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced K4-minus-an-edge witness (c, d, a, b), or None.

    Present exactly when some edge (c, d) has two non-adjacent common
    neighbors a, b; absence is equivalent to every vertex neighborhood
    inducing a disjoint union of cliques.  K4 alone does not count.
    """
    for c, dd in g.edges():
        common = sorted(set(g.adjacency[c]) & set(g.adjacency[dd]))
        for i, a in enumerate(common):
            for b in common[i + 1 :]:
                if not g.has_edge(a, b):
                    return (c, dd, a, b)
    return None


@dataclass(frozen=True)
class BcnVerdict:
    """Outcome of the diamond-freeness check for amply regular graphs with
    beta = 2 and d < alpha(alpha+3)/2; a violation signals a bug, since the
    underlying statement is a theorem.

    The conclusion is induced-diamond-freeness (each vertex neighborhood
    induces a disjoint union of cliques); subgraph containment would be
    falsified by rook's graphs such as K5 x K5, whose row cliques carry
    plenty of non-induced diamonds while their neighborhoods are still
    disjoint cliques.
    """

    applicable: bool
    holds: bool | None
    reason: str
    witness: tuple[int, int, int, int] | None = None


def bcn_check(g: Graph) -> BcnVerdict:
    reg = detect_regularity(g)
    if not reg.is_amply_regular or reg.beta != 2:
        return BcnVerdict(False, None, f"not amply regular with beta=2 ({reg.kind})")
    bound = reg.alpha * (reg.alpha + 3) / 2.0
    if not reg.d < bound:
        return BcnVerdict(
            False, None, f"d={reg.d} not below alpha(alpha+3)/2={bound}"
        )
    witness = contains_induced_diamond(g)
    return BcnVerdict(
        True,
        witness is None,
        "induced-diamond-free" if witness is None else "contains an induced diamond",
        witness,
    )


@dataclass(frozen=True)
class PartitionSpec:
    """A two-sphere partition at x: X inside sphere 1 (complement implicit),
    A inside sphere 2, plus the scale epsilon and curvature level K."""

    x: int
    X: frozenset
    A: frozenset
    epsilon: float
    K: float


def _edge_count(g: Graph, left: Iterable[int], right: set[int]) -> int:
    return sum(1 for u in left for v in g.adjacency[u] if v in right)


def lemma1_gap(g: Graph, p: PartitionSpec) -> float:
    """Slack of the partition inequality at a vertex satisfying CD(inf, K).

    Returns LHS - RHS of

      (1-eps)^2 [ e(X,Xb) + e(X,Ab) + e(Xb,A)
                  - sum_{z in A} d_Xb(z)^2 / d_N1(z)
                  - sum_{z in Ab} d_X(z)^2 / d_N1(z) ]
        >= (1/4)(2K + d(x) - 3)(eps^2 |X| + |Xb|)
           + (1/4)(eps^2 e(X,N2) + e(Xb,N2))
           - (1/2)(eps |X| + |Xb|)^2

    where Xb, Ab are the complements within the spheres.  Vertices of
    sphere 2 always have a sphere-1 neighbor, but 0/0 is read as 0
    defensively for malformed partitions fed from outside.
    """
    _, bmap = ball(g.as_oracle(), p.x, 2)
    n1 = set(bmap.sphere_vertices(1))
    n2 = set(bmap.sphere_vertices(2))
    if not p.X <= n1:
        raise GraphError("X must be a subset of the neighbors of x")
    if not p.A <= n2:
        raise GraphError("A must be a subset of the second sphere of x")
    X = set(p.X)
    Xb = n1 - X
    A = set(p.A)
    Ab = n2 - A
    eps, K = p.epsilon, p.K
    d = len(n1)

    def ratio_sum(zs: set[int], side: set[int]) -> float:
        total = 0.0
        for z in zs:
            dn1 = sum(1 for w in g.adjacency[z] if w in n1)
            ds = sum(1 for w in g.adjacency[z] if w in side)
            if dn1:
                total += ds * ds / dn1
        return total

    e_x_xb = _edge_count(g, X, Xb)
    lhs = (1 - eps) ** 2 * (
        e_x_xb
        + _edge_count(g, X, Ab)
        + _edge_count(g, Xb, A)
        - ratio_sum(A, Xb)
        - ratio_sum(Ab, X)
    )
    rhs = 0.25 * (2 * K + d - 3) * (eps**2 * len(X) + len(Xb))
    rhs += 0.25 * (eps**2 * _edge_count(g, X, n2) + _edge_count(g, Xb, n2))
    rhs -= 0.5 * (eps * len(X) + len(Xb)) ** 2
    return lhs - rhs


def corollary2_gap(g: Graph, x: int, X: frozenset, A: frozenset, K: float) -> float:
    """Slack of the edge-regular partition bound
    e(X,Xb) + e(X,Ab) + e(Xb,A) >= (2K + 2d - alpha - 4) |X||Xb| / (4d).
    """
    reg = detect_regularity(g)
    if not reg.is_edge_regular:
        raise GraphError(f"requires an edge-regular graph, detected {reg.kind}")
    _, bmap = ball(g.as_oracle(), x, 2)
    n1 = set(bmap.sphere_vertices(1))
    n2 = set(bmap.sphere_vertices(2))
    if not (set(X) <= n1 and set(A) <= n2):
        raise GraphError("X, A must sit inside spheres 1 and 2 of x")
    Xb = n1 - set(X)
    Ab = n2 - set(A)
    lhs = (
        _edge_count(g, X, Xb)
        + _edge_count(g, X, Ab)
        + _edge_count(g, Xb, A)
    )
    rhs = (2 * K + 2 * reg.d - reg.alpha - 4) * len(X) * len(Xb) / (4.0 * reg.d)
    return lhs - rhs


def diamond_bruteforce(g: Graph) -> bool:
    """4-subset scan for a K4-minus-an-edge subgraph (oracle for
    contains_diamond); capped at 12 vertices."""
    if g.n > 12:
        raise GraphError(f"diamond scan capped at 12 vertices, got {g.n}")
    for quad in combinations(range(g.n), 4):
        for c, dd in combinations(quad, 2):
            rest = [v for v in quad if v not in (c, dd)]
            if (
                g.has_edge(c, dd)
                and all(g.has_edge(c, w) and g.has_edge(dd, w) for w in rest)
            ):
                return True
    return False
