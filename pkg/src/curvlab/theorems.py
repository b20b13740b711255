"""Theorem checkers, corpus scanning, and counterexample searches.

Each checker turns one proved statement into a predicate over finite
graphs: an applicability test (the hypotheses) and a conclusion test.  A
verdict that is applicable but does not hold indicates an implementation
bug somewhere in the pipeline, never new mathematics, and the scanner
reports it with full evidence.

Checker ids:
  T1.1  regular + even order + nonnegative curvature  => perfect matching
  T1.2  regular + even order + (d-1)-edge-connected   => perfect matching
  T1.3  nonnegative curvature => edge-connectivity >= min degree - 1
  T1.4  amply regular, beta >= 2 => d-edge-connected with star-only
        minimum cuts (quadrangle excepted)
  C1.6  amply regular, beta >= 2, even order => perfect matching
  T2.4  amply regular (d, alpha, 2), d < alpha(alpha+3)/2 => diamond-free
  T2.5  closed-form amply-regular curvature matches the eigensolver
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .cuts import classify_min_cuts, edge_connectivity
from .curvature import bakry_emery_curvature, graph_curvature
from .enumeration import connected_graphs_upto
from .formats import iter_graph6_file
from .generators import generate, parse_family_spec
from .graph import Graph, GraphError, is_connected, structure_queries
from .matching import maximum_matching
from .regularity import (
    arg_curvature_formula,
    bcn_check,
    detect_regularity,
    local_graph_spectrum,
)

CURVATURE_TOL = 1e-8
THEOREM_IDS = ("T1.1", "T1.2", "T1.3", "T1.4", "C1.6", "T2.4", "T2.5")


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    graph_id: str
    applicable: bool
    holds: bool | None
    evidence: dict = field(default_factory=dict, hash=False, compare=False)

    @property
    def violated(self) -> bool:
        return self.applicable and self.holds is False


def _curvature_info(g: Graph) -> tuple[float, dict]:
    kmin, reports = graph_curvature(g)
    return kmin, reports


def check_theorem(g: Graph, theorem_id: str, graph_id: str = "?") -> TheoremVerdict:
    """Evaluate one checker on a finite graph.

    Disconnected graphs are never applicable; evidence carries the
    quantities the conclusion was decided on (curvature values, cut
    certificates, matchings, witnesses) so it can be re-verified.
    """
    if theorem_id not in THEOREM_IDS:
        raise GraphError(f"unknown theorem id {theorem_id!r}")
    if g.n == 0 or not is_connected(g):
        return TheoremVerdict(theorem_id, graph_id, False, None, {"reason": "not connected"})
    reg = detect_regularity(g)

    if theorem_id == "T1.3":
        kmin, _ = _curvature_info(g)
        if kmin < -CURVATURE_TOL:
            return TheoremVerdict(
                theorem_id, graph_id, False, None, {"K": kmin, "reason": "negative curvature"}
            )
        lam, cert = edge_connectivity(g)
        delta = min(g.degree(v) for v in range(g.n))
        return TheoremVerdict(
            theorem_id,
            graph_id,
            True,
            lam >= delta - 1,
            {"K": kmin, "lambda": lam, "delta": delta, "cut": cert},
        )

    if theorem_id in ("T1.1", "T1.2"):
        if not reg.is_regular or g.n % 2 != 0:
            return TheoremVerdict(
                theorem_id, graph_id, False, None, {"reason": "not regular with even order"}
            )
        if theorem_id == "T1.1":
            kmin, _ = _curvature_info(g)
            if kmin < -CURVATURE_TOL:
                return TheoremVerdict(
                    theorem_id, graph_id, False, None, {"K": kmin, "reason": "negative curvature"}
                )
            evidence: dict = {"K": kmin}
        else:
            lam, _ = edge_connectivity(g)
            if lam < reg.d - 1:
                return TheoremVerdict(
                    theorem_id,
                    graph_id,
                    False,
                    None,
                    {"lambda": lam, "d": reg.d, "reason": "not (d-1)-edge-connected"},
                )
            evidence = {"lambda": lam, "d": reg.d}
        matching = maximum_matching(g)
        evidence["matching"] = matching
        return TheoremVerdict(theorem_id, graph_id, True, matching.is_perfect, evidence)

    if theorem_id == "T1.4":
        if not reg.is_amply_regular or reg.beta < 2:
            return TheoremVerdict(
                theorem_id, graph_id, False, None, {"reason": "not amply regular with beta >= 2"}
            )
        lam, cert = edge_connectivity(g)
        quadrangle = g.n == 4 and reg.d == 2
        evidence = {"lambda": lam, "d": reg.d, "cut": cert, "quadrangle": quadrangle}
        if lam != reg.d:
            return TheoremVerdict(theorem_id, graph_id, True, False, evidence)
        if not quadrangle:
            cls = classify_min_cuts(g)
            evidence["stars_only"] = cls.stars_only
            evidence["non_star_cut"] = cls.witness
            return TheoremVerdict(theorem_id, graph_id, True, cls.stars_only, evidence)
        return TheoremVerdict(theorem_id, graph_id, True, True, evidence)

    if theorem_id == "C1.6":
        if not reg.is_amply_regular or reg.beta < 2 or g.n % 2 != 0:
            return TheoremVerdict(
                theorem_id,
                graph_id,
                False,
                None,
                {"reason": "not amply regular with beta >= 2 and even order"},
            )
        matching = maximum_matching(g)
        return TheoremVerdict(
            theorem_id, graph_id, True, matching.is_perfect, {"matching": matching}
        )

    if theorem_id == "T2.4":
        verdict = bcn_check(g)
        return TheoremVerdict(
            theorem_id,
            graph_id,
            verdict.applicable,
            verdict.holds,
            {"reason": verdict.reason, "witness": verdict.witness},
        )

    # T2.5: closed-form curvature against the eigensolver, every vertex
    if not reg.is_amply_regular:
        return TheoremVerdict(theorem_id, graph_id, False, None, {"reason": "not amply regular"})
    worst = 0.0
    o = g.as_oracle()
    for x in range(g.n):
        formula = arg_curvature_formula(
            reg.d, reg.alpha, reg.beta, local_graph_spectrum(g, x)
        )
        solver = bakry_emery_curvature(o, x).K
        worst = max(worst, abs(formula - solver))
    return TheoremVerdict(
        theorem_id, graph_id, True, worst <= 1e-8, {"max_abs_difference": worst}
    )


@dataclass(frozen=True)
class CorpusSource:
    """Where scan graphs come from: a graph6/sparse6 file, a list of
    generator spec strings, or exhaustive connected enumeration up to n."""

    kind: str  # "file" | "generators" | "exhaustive"
    path: str | None = None
    specs: tuple[str, ...] = ()
    max_n: int = 0

    @staticmethod
    def from_string(text: str) -> "CorpusSource":
        """Parse CLI forms: a path, "gen:spec1;spec2", or "exhaustive:N"."""
        if text.startswith("gen:"):
            return CorpusSource("generators", specs=tuple(t for t in text[4:].split(";") if t))
        if text.startswith("exhaustive:"):
            return CorpusSource("exhaustive", max_n=int(text.split(":", 1)[1]))
        return CorpusSource("file", path=text)

    def graphs(self) -> Iterator[tuple[str, Graph]]:
        if self.kind == "file":
            with open(self.path, "r", encoding="ascii") as fh:
                for lineno, g in iter_graph6_file(fh):
                    yield f"{os.path.basename(self.path)}:{lineno}", g
        elif self.kind == "generators":
            for spec in self.specs:
                g = generate(parse_family_spec(spec))
                if not isinstance(g, Graph):
                    raise GraphError(f"spec {spec!r} is an infinite family; scan needs finite graphs")
                yield spec, g
        elif self.kind == "exhaustive":
            yield from connected_graphs_upto(self.max_n)
        else:
            raise GraphError(f"unknown corpus source kind {self.kind!r}")


@dataclass
class ScanSummary:
    total_graphs: int
    checked: int
    applicable: int
    held: int
    violations: list[TheoremVerdict]

    @property
    def clean(self) -> bool:
        return not self.violations


def scan(
    source: CorpusSource,
    theorem_ids: Sequence[str] = THEOREM_IDS,
    parallelism: int = 1,
    seed: int = 0,
) -> tuple[list[TheoremVerdict], ScanSummary]:
    """Run checkers over a corpus; deterministic regardless of parallelism.

    Graphs are dispatched to a thread pool but results are merged in corpus
    order, so two runs with the same source produce identical output.  The
    seed is recorded for reproducibility of any future sampled checkers;
    the current checkers are deterministic.
    """
    del seed  # all current checkers are deterministic
    for tid in theorem_ids:
        if tid not in THEOREM_IDS:
            raise GraphError(f"unknown theorem id {tid!r}")
    items = list(source.graphs())

    def work(item: tuple[str, Graph]) -> list[TheoremVerdict]:
        gid, g = item
        return [check_theorem(g, tid, gid) for tid in theorem_ids]

    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            chunks = list(pool.map(work, items))
    else:
        chunks = [work(item) for item in items]
    verdicts = [v for chunk in chunks for v in chunk]
    summary = ScanSummary(
        total_graphs=len(items),
        checked=len(verdicts),
        applicable=sum(1 for v in verdicts if v.applicable),
        held=sum(1 for v in verdicts if v.applicable and v.holds),
        violations=[v for v in verdicts if v.violated],
    )
    return verdicts, summary


@dataclass(frozen=True)
class ConjectureRow:
    graph_id: str
    n: int
    delta: int
    lam: int
    K: float


@dataclass
class ConjectureReport:
    """Connected graphs with nonnegative curvature, tabulated by
    (minimum degree, edge-connectivity).

    `boundary` lists graphs with lam = delta - 1; none are known, and
    finding one would refute the strengthening of the connectivity bound
    to delta for finite graphs.  Exploratory: no pass/fail semantics.
    """

    max_n: int
    rows: list[ConjectureRow]
    table: dict[tuple[int, int], int]
    boundary: list[ConjectureRow]


def conjecture_scan(max_n: int) -> ConjectureReport:
    if max_n > 9:
        raise GraphError(f"conjecture scan capped at 9 vertices, got {max_n}")
    rows = []
    table: dict[tuple[int, int], int] = {}
    for gid, g in connected_graphs_upto(max_n):
        if g.n < 2:
            continue  # single vertex: lambda = 0 by convention, trivial
        kmin, _ = graph_curvature(g)
        if kmin < -CURVATURE_TOL:
            continue
        lam, _ = edge_connectivity(g)
        delta = min(g.degree(v) for v in range(g.n))
        row = ConjectureRow(gid, g.n, delta, lam, kmin)
        rows.append(row)
        table[(delta, lam)] = table.get((delta, lam), 0) + 1
    boundary = [r for r in rows if r.lam == r.delta - 1]
    return ConjectureReport(max_n, rows, table, boundary)


@dataclass(frozen=True)
class Beta1Finding:
    graph_id: str
    n: int
    d: int
    alpha: int
    beta: int
    lam: int
    girth: float


def beta1_search(extra: Iterable[tuple[str, Graph]] = ()) -> list[Beta1Finding]:
    """Cubic amply regular graphs with beta = 1 whose connectivity drops
    below the degree.

    Always examines the spliced double-Petersen construction (the
    constructive witness that star-cut rigidity fails at beta = 1) plus
    any extra (id, graph) pairs, and returns those with lam < d.
    """
    candidates: list[tuple[str, Graph]] = [
        ("beta1_counterexample", generate("beta1_counterexample")),
        ("petersen", generate("petersen")),
    ]
    candidates.extend(extra)
    findings = []
    for gid, g in candidates:
        reg = detect_regularity(g)
        if not reg.is_amply_regular or reg.beta != 1:
            continue
        lam, _ = edge_connectivity(g)
        if lam < reg.d:
            info = structure_queries(g)
            findings.append(
                Beta1Finding(gid, g.n, reg.d, reg.alpha, reg.beta, lam, info.girth)
            )
    return findings
