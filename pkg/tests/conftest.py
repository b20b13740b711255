"""Shared corpora and helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from curvlab.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    hamming2,
    hypercube,
    paley,
    path_graph,
    petersen,
    triangular,
)
from curvlab.graph import Graph, from_edge_list, is_connected


def amply_corpus() -> dict[str, Graph]:
    """The amply regular graphs used for cross-checks throughout."""
    corpus = {
        "C4": cycle_graph(4),
        "K33": complete_bipartite(3, 3),
        "K44": complete_bipartite(4, 4),
        "T5": triangular(5),
        "T6": triangular(6),
        "T7": triangular(7),
        "paley13": paley(13),
        "petersen": petersen(),
    }
    for d in range(2, 7):
        corpus[f"Q{d}"] = hypercube(d)
    for q in range(3, 6):
        corpus[f"hamming2({q})"] = hamming2(q)
    return corpus


def mixed_corpus() -> dict[str, Graph]:
    """Amply regular corpus plus irregular and sparse extras."""
    corpus = amply_corpus()
    corpus.update(
        {
            "P3": path_graph(3),
            "P6": path_graph(6),
            "C5": cycle_graph(5),
            "K2": complete_graph(2),
            "K5": complete_graph(5),
            "star3": complete_bipartite(1, 3),
            "bull": from_edge_list(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
        }
    )
    rng = random.Random(20240601)
    made = 0
    while made < 6:
        n = rng.randint(5, 9)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.45
        ]
        g = from_edge_list(n, edges)
        if is_connected(g) and g.m > 0:
            corpus[f"rand{made}"] = g
            made += 1
    return corpus


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


@pytest.fixture(scope="session")
def amply():
    return amply_corpus()


@pytest.fixture(scope="session")
def corpus():
    return mixed_corpus()
