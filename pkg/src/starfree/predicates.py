"""Structural predicates: stars, cliques, diamonds, bipartiteness, planarity."""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations

import networkx as nx

from . import _kernels
from .graph import Graph, VertexSet, bits_of, complement, popcount
from .limits import check_cap


def complement_rows(g: Graph) -> list[int]:
    return list(complement(g).rows)


# induced stars ---------------------------------------------------------------


def find_induced_star(g: Graph, r: int) -> tuple[int, list[int]] | None:
    """Return ``(center, leaves)`` of an induced ``K_{1,r}``, or ``None``.

    For each vertex, asks the independent-set kernel for ``r`` pairwise
    nonadjacent neighbours.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    rows = list(g.rows)
    for v in range(g.n):
        nb = rows[v]
        if popcount(nb) < r:
            continue
        found = _kernels.max_independent(rows, nb, r - 1, r)
        if found is not None:
            return v, found[:r]
    return None


def is_k1r_free(g: Graph, r: int) -> bool:
    return find_induced_star(g, r) is None


def k1r_witness(g: Graph, r: int) -> VertexSet | None:
    """Centre plus ``r`` independent neighbours, if ``g`` is not K_{1,r}-free."""
    star = find_induced_star(g, r)
    if star is None:
        return None
    center, leaves = star
    return VertexSet.of(g.n, [center, *leaves])


def is_claw_free(g: Graph) -> bool:
    return is_k1r_free(g, 3)


# cliques and diamonds -----------------------------------------------------------


def find_clique(g: Graph, q: int, within: int | None = None, crows: list[int] | None = None):
    """Some ``q``-clique of ``g`` inside ``within`` as a sorted list, or ``None``."""
    if q < 1:
        raise ValueError("q must be at least 1")
    allowed = g.full_mask if within is None else within
    if popcount(allowed) < q:
        return None
    if crows is None:
        crows = complement_rows(g)
    found = _kernels.max_independent(crows, allowed, q - 1, q)
    return None if found is None else found[:q]


def contains_clique(g: Graph, q: int) -> bool:
    return find_clique(g, q) is not None


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return len(_kernels.max_independent(complement_rows(g), g.full_mask))


def find_diamonds(g: Graph) -> list[tuple[int, int, int, int]]:
    """All induced diamonds as ``(a, b, c, d)`` with ``cd`` the missing edge.

    ``ab`` is the central edge, ``a < b`` and ``c < d``.
    """
    out = []
    for a, b in g.edges():
        common = g.rows[a] & g.rows[b]
        for c, d in combinations(bits_of(common), 2):
            if not g.adjacent(c, d):
                out.append((a, b, c, d))
    return out


def is_diamond_free(g: Graph) -> bool:
    # an induced diamond exists iff some edge has two nonadjacent common neighbours
    for a, b in g.edges():
        common = g.rows[a] & g.rows[b]
        for c in bits_of(common):
            if common & ~g.rows[c] & ~(1 << c):
                return False
    return True


# bipartiteness ------------------------------------------------------------------------


def odd_cycle(rows, alive: int) -> list[int] | None:
    """An odd cycle of the subgraph induced by ``alive``, or ``None``.

    BFS 2-colouring; on the first conflict the two tree paths to the
    conflicting edge close an odd cycle.
    """
    side: dict[int, int] = {}
    parent: dict[int, int] = {}
    rest = alive
    while rest:
        root = (rest & -rest).bit_length() - 1
        side[root] = 0
        parent[root] = -1
        queue = deque([root])
        rest &= ~(1 << root)
        while queue:
            u = queue.popleft()
            for w in bits_of(rows[u] & alive):
                if w not in side:
                    side[w] = side[u] ^ 1
                    parent[w] = u
                    rest &= ~(1 << w)
                    queue.append(w)
                elif side[w] == side[u]:
                    return _close_cycle(parent, u, w)
    return None


def _close_cycle(parent, u, w):
    pu = [u]
    while parent[pu[-1]] >= 0:
        pu.append(parent[pu[-1]])
    on_u = {v: i for i, v in enumerate(pu)}
    pw = [w]
    while pw[-1] not in on_u:
        pw.append(parent[pw[-1]])
    lca = pw.pop()
    return pu[: on_u[lca] + 1] + pw[::-1]


def is_bipartite(g: Graph) -> bool:
    return odd_cycle(g.rows, g.full_mask) is None


# connectivity and regularity -----------------------------------------------------


def components(g: Graph) -> list[int]:
    comps = []
    rest = g.full_mask
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def regularity(g: Graph) -> int | None:
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    return None if degs else 0


def is_cubic(g: Graph) -> bool:
    return g.n > 0 and regularity(g) == 3


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


# planarity ----------------------------------------------------------------------------


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    check_cap("planarity", g.n)
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    planar, _ = nx.check_planarity(to_networkx(g))
    return planar


def is_outerplanar(g: Graph) -> bool:
    """Outerplanar iff adding one universal vertex leaves the graph planar."""
    check_cap("planarity", g.n)
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return False
    return is_planar(_with_apex(g))


def _with_apex(g: Graph) -> Graph:
    n = g.n
    rows = [row | (1 << n) for row in g.rows]
    rows.append(g.full_mask)
    return Graph(n + 1, tuple(rows))


# exhaustive Kuratowski search (oracle for tiny graphs) ----------------------------------


def has_kuratowski_subdivision(g: Graph) -> bool:
    """Search every placement of a subdivided K_5 or K_{3,3}. Intended for n <= 8."""
    if g.n > 10:
        raise ValueError("exhaustive Kuratowski search is limited to n <= 10")
    verts = range(g.n)
    degs = g.degrees()
    for branch in combinations(verts, 5):
        if all(degs[v] >= 4 for v in branch):
            pairs = list(combinations(branch, 2))
            if _route(g, pairs, set(branch)):
                return True
    for six in combinations(verts, 6):
        if any(degs[v] < 3 for v in six):
            continue
        first = six[0]
        for side in combinations(six[1:], 2):
            left = (first, *side)
            right = tuple(v for v in six if v not in left)
            pairs = [(a, b) for a in left for b in right]
            if _route(g, pairs, set(six)):
                return True
    return False


def _route(g: Graph, pairs, used: set[int]) -> bool:
    """Connect every pair by internally disjoint paths avoiding ``used``."""
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]
    free = [v for v in range(g.n) if v not in used]
    for length in range(len(free) + 1):
        for inner in permutations(free, length):
            path = (a, *inner, b)
            if all(g.adjacent(path[i], path[i + 1]) for i in range(len(path) - 1)):
                if _route(g, rest, used | set(inner)):
                    return True
    return False
