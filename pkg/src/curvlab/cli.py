"""curvlab command line: curvature, connectivity, matching, regularity,
corpus scans, and counterexample searches.

Graph specs are either a path to a graph6/sparse6 or edge-list file, or a
generator string such as "hypercube:4", "paley:13", "zxk:3" (the integer
line times K_3).  Exit codes: 0 clean, 2 a proved statement failed on some
graph (an implementation bug), 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .curvature import bakry_emery_curvature, graph_curvature
from .cuts import classify_min_cuts, edge_connectivity
from .formats import FormatError, iter_graph6_file, parse_edge_list
from .generators import INFINITE_KINDS, generate, parse_family_spec
from .graph import Graph, GraphError, NeighborOracle
from .matching import maximum_matching
from .regularity import detect_regularity
from .reports import _plain, emit_report
from .theorems import THEOREM_IDS, CorpusSource, beta1_search, conjecture_scan, scan

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_INPUT = 3


def _load_graph_spec(text: str) -> Graph | NeighborOracle:
    """A path to a graph file (first graph of it) or a generator string."""
    if os.path.exists(text):
        with open(text, "r", encoding="ascii") as fh:
            content = fh.read()
        stripped = content.lstrip()
        first = stripped.splitlines()[0] if stripped else ""
        if first and (first[0].isdigit()) and not first.startswith(">>"):
            return parse_edge_list(content)
        graphs = iter_graph6_file(content.splitlines())
        if not graphs:
            raise FormatError(f"no graphs in {text}")
        return graphs[0][1]
    return generate(parse_family_spec(text))


def _parse_vertex(text: str):
    parts = text.split(",")
    if len(parts) == 1:
        return int(parts[0])
    return tuple(int(p) for p in parts)


def _threads(args) -> int:
    env = os.environ.get("CURVLAB_THREADS")
    cap = int(env) if env else None
    requested = getattr(args, "parallelism", 1) or 1
    if cap is not None:
        requested = min(requested, cap)
    return max(1, requested)


def _print_json(payload) -> None:
    print(json.dumps(_plain(payload), indent=2, sort_keys=True))


def cmd_curvature(args) -> int:
    g = _load_graph_spec(args.graph)
    dim = math.inf if args.dimension in (None, "inf") else float(args.dimension)
    if isinstance(g, NeighborOracle):
        if args.vertex is None:
            spec = parse_family_spec(args.graph)
            vertex = 0 if spec.kind == "integer_line" else (0, 0)
        else:
            vertex = _parse_vertex(args.vertex)
        rep = bakry_emery_curvature(g, vertex, dim)
        _print_json({"vertex": str(rep.vertex), "K": rep.K, "dimension": dim})
        return EXIT_OK
    if args.vertex is not None:
        rep = bakry_emery_curvature(g.as_oracle(), _parse_vertex(args.vertex), dim)
        _print_json({"vertex": str(rep.vertex), "K": rep.K, "dimension": dim})
        return EXIT_OK
    kmin, reports = graph_curvature(g, dim)
    _print_json(
        {
            "K": kmin,
            "dimension": dim,
            "per_vertex": {str(v): r.K for v, r in sorted(reports.items())},
        }
    )
    return EXIT_OK


def cmd_connectivity(args) -> int:
    g = _require_finite(_load_graph_spec(args.graph))
    lam, cert = edge_connectivity(g)
    payload = {
        "lambda": lam,
        "cut": None
        if cert is None
        else {"side_L": sorted(cert.side_L), "edges": list(cert.cut_edges)},
    }
    if args.classify_cuts:
        cls = classify_min_cuts(g)
        payload["stars_only"] = cls.stars_only
        payload["non_star_cut"] = (
            None if cls.witness is None else {"side_L": sorted(cls.witness.side_L)}
        )
    _print_json(payload)
    return EXIT_OK


def cmd_matching(args) -> int:
    g = _require_finite(_load_graph_spec(args.graph))
    m = maximum_matching(g)
    _print_json({"size": m.size, "perfect": m.is_perfect, "edges": list(m.edges)})
    return EXIT_OK


def cmd_regularity(args) -> int:
    g = _require_finite(_load_graph_spec(args.graph))
    reg = detect_regularity(g)
    _print_json(
        {
            "kind": reg.kind,
            "n": reg.n,
            "d": reg.d,
            "alpha": reg.alpha,
            "beta": reg.beta,
            "diagnostic": reg.diagnostic,
        }
    )
    return EXIT_OK


def cmd_check(args) -> int:
    source = CorpusSource.from_string(args.source)
    ids = tuple(t.strip() for t in args.theorems.split(",")) if args.theorems else THEOREM_IDS
    verdicts, summary = scan(source, ids, parallelism=_threads(args), seed=args.seed)
    emit_report(verdicts, args.format, args.out)
    print(
        f"\nchecked {summary.checked} verdicts on {summary.total_graphs} graphs: "
        f"{summary.applicable} applicable, {summary.held} held, "
        f"{len(summary.violations)} violations",
        file=sys.stderr,
    )
    for v in summary.violations:
        print(f"VIOLATION {v.theorem} on {v.graph_id}: {v.evidence}", file=sys.stderr)
    return EXIT_OK if summary.clean else EXIT_VIOLATION


def cmd_conjecture(args) -> int:
    report = conjecture_scan(args.max_n)
    table = {
        f"delta={d},lambda={l}": c for (d, l), c in sorted(report.table.items())
    }
    _print_json(
        {
            "max_n": report.max_n,
            "nonnegative_curvature_graphs": len(report.rows),
            "table": table,
            "boundary_cases": [
                {"graph": r.graph_id, "n": r.n, "delta": r.delta, "lambda": r.lam}
                for r in report.boundary
            ],
        }
    )
    return EXIT_OK


def cmd_beta1(args) -> int:
    del args
    findings = beta1_search()
    _print_json(
        [
            {
                "graph": f.graph_id,
                "n": f.n,
                "d": f.d,
                "alpha": f.alpha,
                "beta": f.beta,
                "lambda": f.lam,
                "girth": f.girth,
            }
            for f in findings
        ]
    )
    return EXIT_OK


def _require_finite(g) -> Graph:
    if not isinstance(g, Graph):
        raise GraphError("this command needs a finite graph, got an infinite family")
    return g


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvlab",
        description="Bakry-Emery curvature, connectivity, and matching toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curvature", help="vertex or whole-graph curvature")
    p.add_argument("graph")
    p.add_argument("--vertex", help="vertex id (int, or comma tuple for products)")
    p.add_argument("--dimension", help="dimension parameter N (default inf)")
    p.set_defaults(fn=cmd_curvature)

    p = sub.add_parser("connectivity", help="edge connectivity with certificate")
    p.add_argument("graph")
    p.add_argument("--classify-cuts", action="store_true")
    p.set_defaults(fn=cmd_connectivity)

    p = sub.add_parser("matching", help="maximum matching")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_matching)

    p = sub.add_parser("regularity", help="regularity class detection")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_regularity)

    p = sub.add_parser("check", help="run theorem checkers over a corpus")
    p.add_argument("--source", required=True, help="file path, gen:spec;spec, or exhaustive:N")
    p.add_argument("--theorems", help=f"comma list from {','.join(THEOREM_IDS)}")
    p.add_argument("--format", default="json", choices=("json", "csv", "markdown"))
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("conjecture", help="tabulate (delta, lambda) over nonneg-curvature graphs")
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    p.set_defaults(fn=cmd_conjecture)

    p = sub.add_parser("beta1-search", help="beta=1 connectivity-drop witnesses")
    p.set_defaults(fn=cmd_beta1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, FormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
