"""Seeded samplers for K_{1,r}-free graphs.

Each graph is drawn from its own counter-based stream keyed by
``(seed, index)``, so a sweep is reproducible no matter how its graphs
are distributed across workers.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .predicates import is_k1r_free

STRATEGIES = ("rejection", "line_graph")


class SamplingBudgetExhausted(RuntimeError):
    def __init__(self, r: int, n: int, attempts: int):
        super().__init__(f"no K_{{1,{r}}}-free graph on <= {n} vertices in {attempts} attempts (acceptance rate 0/{attempts})")
        self.attempts = attempts
        self.acceptance_rate = 0.0


def stream(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def _gnp(rng: np.random.Generator, order: int, p: float) -> list[tuple[int, int]]:
    iu, ju = np.triu_indices(order, 1)
    keep = rng.random(iu.size) < p
    return list(zip(iu[keep].tolist(), ju[keep].tolist()))


def line_graph(n: int, edges: list[tuple[int, int]]) -> Graph:
    """Vertices are the edges of the input; adjacent iff they share an endpoint."""
    at: list[list[int]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        at[u].append(i)
        at[v].append(i)
    pairs = set()
    for incident in at:
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                pairs.add((incident[a], incident[b]))
    return Graph.from_edges(len(edges), sorted(pairs))


def sample_k1r_free(
    r: int,
    n: int,
    seed: int,
    strategy: str = "rejection",
    index: int = 0,
    budget: int = 10_000,
) -> Graph:
    """A K_{1,r}-free graph on at most ``n`` vertices.

    ``rejection`` draws G(m, p) with ``m`` uniform in ``1..n`` and ``p``
    uniform in ``[0, 1)`` until the draw is K_{1,r}-free.  ``line_graph``
    returns the line graph of a random graph with at most ``n`` edges;
    line graphs are claw-free and hence K_{1,r}-free for every ``r >= 3``.
    """
    if r < 3:
        raise ValueError("r must be at least 3")
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = stream(seed, index)
    tag = f"{strategy}:r={r}:seed={seed}:i={index}"
    if strategy == "line_graph":
        order = int(rng.integers(2, n + 2))
        edges = _gnp(rng, order, float(rng.random()))
        if len(edges) > n:
            pick = np.sort(rng.permutation(len(edges))[:n])
            edges = [edges[i] for i in pick]
        if not edges:
            return Graph.empty(1).with_label(tag)
        return line_graph(order, edges).with_label(tag)
    if strategy != "rejection":
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    for _ in range(budget):
        order = int(rng.integers(1, n + 1))
        g = Graph.from_edges(order, _gnp(rng, order, float(rng.random())))
        if is_k1r_free(g, r):
            return g.with_label(tag)
    raise SamplingBudgetExhausted(r, n, budget)
