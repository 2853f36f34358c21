"""Exhaustive generation of connected cubic graphs up to isomorphism.

Two unrelated strategies are provided so their counts can be checked
against each other:

``saturate``
    Builds the graph one vertex at a time.  A state is the set of edges
    incident to the saturated vertices; states are deduplicated by
    canonical form with saturated vertices coloured, and the next vertex to
    saturate is chosen canonically.
``insert``
    Grows order ``n`` from smaller orders: subdivide two distinct edges of
    an order ``n - 2`` graph (or one edge in each of two graphs whose
    orders sum to ``n - 2``) and join the new vertices, or replace an edge
    of an order ``n - 4`` graph by a path through a diamond.  Deduplication
    uses networkx's VF2 matcher inside buckets of a cheap invariant.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import networkx as nx

from .canon import canonical_form, canonical_key, canonical_labelling
from .graph import Graph, bits_of, popcount
from .predicates import is_connected, to_networkx

MAX_ORDER = 14


def _check_order(n: int) -> None:
    if n % 2 or not 4 <= n <= MAX_ORDER:
        raise ValueError(f"cubic enumeration needs even n in 4..{MAX_ORDER}, got {n}")


# vertex saturation ------------------------------------------------------------------------


def _saturate(n: int) -> list[Graph]:
    states = {(): (Graph.empty(n), 0)}
    for _ in range(n):
        nxt: dict[tuple, tuple[Graph, int]] = {}
        for g, sat in states.values():
            colours = [1 if sat >> v & 1 else 0 for v in range(n)]
            perm = canonical_labelling(g, colours)
            g = g.relabel(perm)
            sat = sum(1 << perm[v] for v in bits_of(sat))
            free = g.full_mask & ~sat
            touched = [v for v in bits_of(free) if g.rows[v]]
            v = touched[0] if touched else (free & -free).bit_length() - 1
            for child in _fill(g, v, sat):
                csat = sat | (1 << v)
                key = canonical_key(child, [1 if csat >> u & 1 else 0 for u in range(n)])
                if key not in nxt:
                    nxt[key] = (child, csat)
        states = nxt
    return [canonical_form(g) for g, _ in states.values()]


def _fill(g: Graph, v: int, sat: int) -> Iterator[Graph]:
    """Every way to give ``v`` degree 3 using unsaturated vertices."""
    need = 3 - g.degree(v)
    cands = g.full_mask & ~sat & ~g.rows[v] & ~(1 << v)
    live = [u for u in bits_of(cands) if g.rows[u] and g.degree(u) < 3]
    isolated = [u for u in bits_of(cands) if not g.rows[u]]
    for fresh in range(min(need, len(isolated)) + 1):
        for old in combinations(live, need - fresh):
            rows = list(g.rows)
            for u in (*old, *isolated[:fresh]):
                rows[v] |= 1 << u
                rows[u] |= 1 << v
            child = Graph(g.n, tuple(rows))
            csat = sat | (1 << v)
            rest = child.full_mask & ~csat
            # the saturated part can no longer grow: it must be everything
            if rest and not any(child.rows[u] for u in bits_of(rest)):
                continue
            yield child


# edge insertion -----------------------------------------------------------------------------


def _grow2(g: Graph) -> Iterator[Graph]:
    """Subdivide two distinct edges and join the subdivision vertices."""
    edges = g.edges()
    n = g.n
    x, y = n, n + 1
    for (a, b), (c, d) in combinations(edges, 2):
        pairs = [e for e in edges if e not in ((a, b), (c, d))]
        pairs += [(a, x), (x, b), (c, y), (y, d), (x, y)]
        yield Graph.from_edges(n + 2, pairs)


def _bridge(g: Graph, h: Graph) -> Iterator[Graph]:
    """Subdivide one edge in each of ``g`` and ``h`` and join the subdivision vertices."""
    off = g.n
    n = g.n + h.n
    x, y = n, n + 1
    hedges = [(u + off, v + off) for u, v in h.edges()]
    for a, b in g.edges():
        for c, d in hedges:
            pairs = [e for e in g.edges() if e != (a, b)] + [e for e in hedges if e != (c, d)]
            pairs += [(a, x), (x, b), (c, y), (y, d), (x, y)]
            yield Graph.from_edges(n + 2, pairs)


def _grow4(g: Graph) -> Iterator[Graph]:
    """Replace an edge ``ab`` by a path through a new diamond."""
    edges = g.edges()
    n = g.n
    p, q, s, t = n, n + 1, n + 2, n + 3  # pq is the central edge, s and t the tips
    for a, b in edges:
        pairs = [e for e in edges if e != (a, b)]
        pairs += [(p, q), (p, s), (q, s), (p, t), (q, t), (a, s), (t, b)]
        yield Graph.from_edges(n + 4, pairs)


def _bucket_key(g: Graph) -> tuple:
    tri = []
    for v in range(g.n):
        nb = list(bits_of(g.rows[v]))
        tri.append(sum(1 for a, b in combinations(nb, 2) if g.adjacent(a, b)))
    squares = []
    for v in range(g.n):
        count = 0
        for u in range(g.n):
            if u != v:
                c = popcount(g.rows[u] & g.rows[v])
                count += c * (c - 1) // 2
        squares.append(count)
    return tuple(sorted(zip(tri, squares)))


def _insert(n: int) -> list[Graph]:
    levels = {4: [Graph.complete(4)]}
    for order in range(6, n + 1, 2):
        buckets: dict[tuple, list[nx.Graph]] = {}
        out = []
        sources = [_grow2(g) for g in levels[order - 2]]
        sources += [_grow4(g) for g in levels.get(order - 4, [])]
        for small in range(4, (order - 2) // 2 + 1, 2):
            big = order - 2 - small
            for i, g in enumerate(levels[small]):
                for j, h in enumerate(levels[big]):
                    if small < big or i <= j:
                        sources.append(_bridge(g, h))
        for source in sources:
            for h in source:
                key = _bucket_key(h)
                hx = to_networkx(h)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(hx, other) for other in bucket):
                    continue
                bucket.append(hx)
                out.append(h)
        levels[order] = out
    return levels[n]


def enumerate_cubic(n: int, strategy: str = "saturate") -> list[Graph]:
    """All connected cubic graphs of order ``n`` up to isomorphism, in canonical form."""
    _check_order(n)
    if strategy == "saturate":
        graphs = _saturate(n)
    elif strategy == "insert":
        graphs = [canonical_form(g) for g in _insert(n)]
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    for g in graphs:
        assert is_connected(g) and all(d == 3 for d in g.degrees())
    graphs.sort(key=lambda g: g.rows)
    return [g.with_label(f"cubic{n}_{i}") for i, g in enumerate(graphs)]
