"""Named graph families, finite and infinite, plus the string-spec parser.

Finite specs yield :class:`Graph` with documented vertex labelings; the two
infinite families (the integer line and its Cartesian product with a
complete graph) yield :class:`NeighborOracle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, NeighborOracle, from_edge_list

INFINITE_KINDS = frozenset({"integer_line", "line_times_complete"})

_FINITE_KINDS = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "hypercube": 1,
    "petersen": 0,
    "triangular": 1,
    "hamming2": 1,
    "paley": 1,
    "cartesian_product": 2,
    "beta1_counterexample": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    """Tagged union of graph family names with parameters.

    `kind` is one of the finite kinds above or an infinite kind;
    `args` holds integer parameters, or nested FamilySpec for products.
    """

    kind: str
    args: tuple = ()

    def __str__(self) -> str:
        if not self.args:
            return self.kind
        return f"{self.kind}:{','.join(str(a) for a in self.args)}"


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def path_graph(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return from_edge_list(n, list(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    _require(m >= 1 and n >= 1, f"complete_bipartite needs m,n >= 1, got {m},{n}")
    return from_edge_list(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def hypercube(d: int) -> Graph:
    """d-cube; vertices are bitmasks 0..2^d-1, edges at Hamming distance 1."""
    _require(d >= 1, f"hypercube needs d >= 1, got {d}")
    edges = [(v, v ^ (1 << b)) for v in range(1 << d) for b in range(d) if v < v ^ (1 << b)]
    return from_edge_list(1 << d, edges)


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return from_edge_list(10, edges)


def triangular(n: int) -> Graph:
    """Line graph of K_n: vertices are the 2-subsets of [n] in lexicographic
    order, adjacent when they share an element."""
    _require(n >= 3, f"triangular needs n >= 3, got {n}")
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = [
        (index[p], index[q])
        for p, q in combinations(pairs, 2)
        if set(p) & set(q)
    ]
    return from_edge_list(len(pairs), edges)


def hamming2(q: int) -> Graph:
    """Rook's graph K_q x K_q; vertex (i,j) has index i*q + j."""
    _require(q >= 2, f"hamming2 needs q >= 2, got {q}")
    edges = []
    for i in range(q):
        for j in range(q):
            v = i * q + j
            for jj in range(j + 1, q):
                edges.append((v, i * q + jj))
            for ii in range(i + 1, q):
                edges.append((v, ii * q + j))
    return from_edge_list(q * q, edges)


def paley(q: int) -> Graph:
    """Paley graph on a prime q = 1 mod 4; i ~ j iff i-j is a nonzero square."""
    if not (_is_prime(q) and q % 4 == 1):
        raise GraphError(f"paley requires a prime q = 1 mod 4, got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    edges = [(i, j) for i in range(q) for j in range(i + 1, q) if (j - i) % q in squares]
    return from_edge_list(q, edges)


def cartesian_product(a: Graph, b: Graph) -> Graph:
    """Box product; vertex (u, v) has index u * b.n + v."""
    edges = []
    for u in range(a.n):
        for v in range(b.n):
            base = u * b.n + v
            for w in b.adjacency[v]:
                if w > v:
                    edges.append((base, u * b.n + w))
            for w in a.adjacency[u]:
                if w > u:
                    edges.append((base, w * b.n + v))
    return from_edge_list(a.n * b.n, edges)


def beta1_counterexample() -> Graph:
    """Two Petersen copies, edge (0,1) deleted in each, spliced by two edges.

    Cubic on 20 vertices with girth 5, hence amply regular (3, 0, 1), and
    the two splice edges form a 2-edge cut.
    """
    p = petersen()
    edges = []
    for u, v in p.edges():
        if (u, v) == (0, 1):
            continue
        edges.append((u, v))
        edges.append((u + 10, v + 10))
    edges += [(0, 10), (1, 11)]
    return from_edge_list(20, edges)


def integer_line() -> NeighborOracle:
    """The two-sided infinite path on the integers."""
    return NeighborOracle(lambda v: (v - 1, v + 1))


def line_times_complete(k: int) -> NeighborOracle:
    """Cartesian product of the integer line with K_k; vertices (i, c)."""
    _require(k >= 1, f"line_times_complete needs k >= 1, got {k}")

    def nbrs(v):
        i, c = v
        out = [((i - 1), c), ((i + 1), c)]
        out.extend((i, cc) for cc in range(k) if cc != c)
        return out

    return NeighborOracle(nbrs)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def generate(spec: FamilySpec | str):
    """Materialize a family spec: Graph for finite, NeighborOracle for infinite."""
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    kind, args = spec.kind, spec.args
    if kind == "path":
        return path_graph(*args)
    if kind == "cycle":
        return cycle_graph(*args)
    if kind == "complete":
        return complete_graph(*args)
    if kind == "complete_bipartite":
        return complete_bipartite(*args)
    if kind == "hypercube":
        return hypercube(*args)
    if kind == "petersen":
        return petersen()
    if kind == "triangular":
        return triangular(*args)
    if kind == "hamming2":
        return hamming2(*args)
    if kind == "paley":
        return paley(*args)
    if kind == "cartesian_product":
        parts = [generate(s) for s in args]
        if not all(isinstance(p, Graph) for p in parts):
            raise GraphError("cartesian_product supports finite factors only")
        return cartesian_product(*parts)
    if kind == "beta1_counterexample":
        return beta1_counterexample()
    if kind == "integer_line":
        return integer_line()
    if kind == "line_times_complete":
        return line_times_complete(*args)
    raise GraphError(f"unknown family kind {kind!r}")


_ALIASES = {
    "zxk": "line_times_complete",
    "line": "integer_line",
    "beta1": "beta1_counterexample",
    "kbip": "complete_bipartite",
}


def parse_family_spec(text: str) -> FamilySpec:
    """Parse CLI strings like "hypercube:4", "paley:13", "zxk:3".

    Products use a '+' between two non-nested factor specs:
    "product:cycle:5+complete:2".
    """
    text = text.strip()
    if text.startswith("product:"):
        body = text[len("product:") :]
        if "+" not in body:
            raise GraphError(f"product spec needs two '+'-separated factors: {text!r}")
        left, right = body.split("+", 1)
        return FamilySpec(
            "cartesian_product", (parse_family_spec(left), parse_family_spec(right))
        )
    name, _, argtext = text.partition(":")
    name = _ALIASES.get(name, name)
    if name not in _FINITE_KINDS and name not in INFINITE_KINDS:
        raise GraphError(f"unknown graph family {name!r}")
    if not argtext:
        args: tuple = ()
    else:
        try:
            args = tuple(int(t) for t in argtext.split(","))
        except ValueError as exc:
            raise GraphError(f"bad parameters in spec {text!r}") from exc
    expected = _FINITE_KINDS.get(name, 1 if name == "line_times_complete" else 0)
    if len(args) != expected:
        raise GraphError(
            f"family {name!r} takes {expected} parameter(s), got {len(args)}"
        )
    if any(a <= 0 for a in args):
        raise GraphError(f"parameters must be positive in {text!r}")
    return FamilySpec(name, args)
