"""Generators for the extremal constructions, with their declared invariants.

Named graphs are stored as vertex-name tables plus edge lists so each can
be compared by eye with its drawing; the vertex order of a table is the
vertex order of the generated graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, disjoint_union, join


def _named(names: list[str], edges: str, label: str) -> Graph:
    index = {name: i for i, name in enumerate(names)}
    pairs = []
    for token in edges.split():
        a, b = token.split("-")
        pairs.append((index[a], index[b]))
    return Graph.from_edges(len(names), pairs, label)


def _series(prefix: str, count: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, count + 1)]


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


# elementary graphs ---------------------------------------------------------------


def cycle(n: int) -> Graph:
    _check(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def wheel(m: int) -> Graph:
    """``C_m`` plus a hub adjacent to every cycle vertex; the hub is vertex ``m``."""
    _check(m >= 3, "wheel needs m >= 3")
    return join(cycle(m), Graph.complete(1)).with_label(f"W{m}")


def join_cliques(r: int, k: int, t: int) -> Graph:
    """``(r-1)K_k + K_t``; the ``K_t`` vertices come last and are universal."""
    _check(r >= 3 and k >= 1 and t >= 1, "join_cliques needs r >= 3, k >= 1, t >= 1")
    cliques = disjoint_union(*[Graph.complete(k)] * (r - 1))
    return join(cliques, Graph.complete(t)).with_label(f"{r - 1}K{k}+K{t}")


def c5_join_kk(k: int) -> Graph:
    _check(1 <= k <= 3, "c5_join_kk needs k in 1..3")
    return join(cycle(5), Graph.complete(k)).with_label(f"C5+K{k}")


def triangle_necklace(k: int) -> Graph:
    """``F_{2k}``: triangles ``x_i y_i z_i`` with ``x``/``y`` matched in pairs and ``z`` cyclically."""
    _check(k >= 1, "triangle_necklace needs k >= 1")
    m = 2 * k

    def x(i):  # i is 1-based
        return 3 * (i - 1)

    edges = []
    for i in range(1, m + 1):
        edges += [(x(i), x(i) + 1), (x(i) + 1, x(i) + 2), (x(i), x(i) + 2)]
    for i in range(1, k + 1):
        edges.append((x(2 * i - 1), x(2 * i)))
        edges.append((x(2 * i - 1) + 1, x(2 * i) + 1))
        edges.append((x(2 * i) + 2, x(2 * i % m + 1) + 2))
    return Graph.from_edges(3 * m, edges, f"F{m}")


# cubic chains ---------------------------------------------------------------------------

_G12_NAMES = _series("u", 4) + _series("v", 4) + _series("w", 4)
_G12_EDGES = """
u1-u2 u2-u3 u3-u1 v1-v2 v2-v3 v3-v1 w1-w2 w2-w3 w3-w1
u3-u4 u4-v4 v4-w4 v3-v4 w3-w4 u2-v1 v2-w1 u4-w4
"""
# the two degree-2 vertices used to link copies
_G12_PORTS = (0, 9)

_G20_NAMES = _series("v", 4) + _series("u", 8) + _series("w", 8)
_G20_EDGES = """
u1-u2 u1-u3 u2-u3 u2-u4 u3-u4 u5-u6 u5-u7 u6-u7 u7-u8 u1-u5 u4-u6
w1-w2 w1-w3 w2-w3 w2-w4 w3-w4 w5-w6 w5-w7 w6-w7 w7-w8 w1-w5 w4-w6
v2-v3 v3-v4 v2-v4 v1-v2 v1-u8 u8-w8 v1-w8
"""
_G20_PORTS = (3, 2)


def g12() -> Graph:
    return _named(_G12_NAMES, _G12_EDGES, "G12")


def g20() -> Graph:
    return _named(_G20_NAMES, _G20_EDGES, "G20")


def _chain(base: Graph, ports: tuple[int, int], k: int, label: str) -> Graph:
    """``k`` copies of ``base`` linked in a ring, port ``v`` of copy ``i`` to port ``u`` of copy ``i+1``."""
    u, v = ports
    g = disjoint_union(*[base] * k)
    extra = []
    if k == 1:
        extra.append((u, v))
    else:
        for i in range(k):
            extra.append((i * base.n + v, ((i + 1) % k) * base.n + u))
    return Graph.from_edges(g.n, g.edges() + extra, label)


def h_cubic(k: int) -> Graph:
    _check(k >= 1, "h_cubic needs k >= 1")
    return _chain(g12(), _G12_PORTS, k, f"H{k}cubic")


def g_cubic(k: int) -> Graph:
    _check(k >= 2, "g_cubic needs k >= 2")
    return _chain(g20(), _G20_PORTS, k, f"G{k}cubic")


# 4-regular examples -----------------------------------------------------------------------

_G15_NAMES = _series("t", 5) + _series("a", 3) + ["b1", "b2", "c1", "c2", "d1", "d2", "e1"]
_G15_EDGES = """
t1-t4 t1-t5 t2-t3 t2-t5 t3-t4
a1-t2 a1-t3 a1-a2 a1-a3 a2-a3
b1-t1 b1-t4 b1-b2 b1-a2 b2-a2
c1-b2 c1-c2 c1-t2 c1-t5 b2-c2
d1-d2 d1-c2 d2-c2 d1-t4 d1-t3
e1-d2 e1-a3 d2-a3 e1-t5 e1-t1
"""
# v, u, w: v is adjacent to u and w, the edges rewired by the ring
_G15_V, _G15_U, _G15_W = 11, 12, 13

_G30_NAMES = _series("t", 5) + _series("u", 5) + _series("v", 10) + _series("w", 5) + _series("x", 5)
_G30_EDGES = """
v1-v2 v2-v3 v3-v4 v4-v5 v5-v6 v6-v7 v7-v8 v8-v9 v9-v10 v10-v1
x1-x2 x2-x3 x3-x4 x4-x5 x5-x1
v1-u1 u1-v2 v3-u2 u2-v4 v5-u3 u3-v6 v7-u4 u4-v8 v9-u5 u5-v10
v10-w1 w1-v1 v2-w2 w2-v3 v4-w3 w3-v5 v6-w4 w4-v7 v8-w5 w5-v9
w1-x1 x1-w2 w2-x2 x2-w3 w3-x3 x3-w4 w4-x4 x4-w5 w5-x5 x5-w1
u4-t4 t4-u5 u3-t3 t3-u4 u2-t2 t2-u3 u1-t1 t1-u2 u1-t5 t5-u5
t5-t1 t1-t2 t2-t3 t3-t4 t4-t5
"""


def g15() -> Graph:
    return _named(_G15_NAMES, _G15_EDGES, "G15")


def g15_ring(k: int) -> Graph:
    """``k`` copies of ``G15`` with ``v_j u_j, v_j w_j`` moved to ``v_{j+1} u_j, v_{j+1} w_j``."""
    _check(k >= 2, "g15_ring needs k >= 2")
    base = g15()
    n = base.n
    drop = {frozenset((_G15_V, _G15_U)), frozenset((_G15_V, _G15_W))}
    edges = []
    for j in range(k):
        off = j * n
        nxt = ((j + 1) % k) * n
        edges += [(a + off, b + off) for a, b in base.edges() if frozenset((a, b)) not in drop]
        edges += [(nxt + _G15_V, off + _G15_U), (nxt + _G15_V, off + _G15_W)]
    return Graph.from_edges(k * n, edges, f"G15({k})")


def g30() -> Graph:
    return _named(_G30_NAMES, _G30_EDGES, "G30")


# k-independence constructions -----------------------------------------------------------


def alpha_k_sharp(r: int, k: int, t: int) -> Graph:
    """``(r-1)K_{k+1} + K_t``."""
    _check(k >= 0, "alpha_k_sharp needs k >= 0")
    return join_cliques(r, k + 1, t)


def prop61(r: int, k: int, p: int, t: int, mu: int) -> Graph:
    """``p`` groups of ``r-1`` copies of ``K_{k+1}`` glued by cliques ``X1_j``, ``X2_j``.

    ``X1_j`` (order ``t+mu``) sees all of group ``j``; ``X2_j`` (order ``t``)
    sees group ``j`` except its first copy, plus the first copy of group
    ``j+1`` (cyclically); ``X1_j`` and ``X2_j`` together form a clique.
    """
    _check(k >= 0 and r >= max(3, k + 1), "prop61 needs k >= 0 and r >= max(3, k+1)")
    _check(p >= 1 and t >= 1 and mu in (0, 1), "prop61 needs p >= 1, t >= 1, mu in {0, 1}")
    s = k + 1
    per_group = (r - 1) * s
    block = per_group + 2 * t + mu
    n = p * block
    edges = []

    def copy(j, c):
        start = (j % p) * block + c * s
        return list(range(start, start + s))

    for j in range(p):
        for c in range(r - 1):
            vs = copy(j, c)
            edges += [(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]]
        base = j * block + per_group
        x1 = list(range(base, base + t + mu))
        x2 = list(range(base + t + mu, base + 2 * t + mu))
        xs = x1 + x2
        edges += [(a, b) for i, a in enumerate(xs) for b in xs[i + 1 :]]
        for c in range(r - 1):
            edges += [(x, y) for x in x1 for y in copy(j, c)]
        seen = [copy(j, c) for c in range(1, r - 1)] + [copy(j + 1, 0)]
        for vs in seen:
            edges += [(x, y) for x in x2 for y in vs]
    # with p = 1 the first copy is reached twice
    return Graph.from_edges(n, sorted(set(edges)), f"Prop61(r={r},k={k},p={p},t={t},mu={mu})")


# family specs -------------------------------------------------------------------------------


@dataclass(frozen=True)
class _Family:
    params: tuple[str, ...]
    build: Callable[..., Graph]
    r: Callable[..., int]
    expected: Callable[..., dict]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


FAMILIES: dict[str, _Family] = {
    "JoinCliques": _Family(
        ("r", "k", "t"),
        join_cliques,
        lambda r, k, t: r,
        lambda r, k, t: {"n": (r - 1) * k + t, "gamma": 1, ("alphaF_chromatic", k): (r - 1) * k},
    ),
    "Wheel": _Family(
        ("m",),
        wheel,
        lambda m: m // 2 + 1,
        lambda m: {"n": m + 1, "gamma": 1, "bipartite": m - m % 2},
    ),
    "Cycle": _Family(
        ("n",),
        cycle,
        lambda n: 3,
        lambda n: {"n": n, "alpha": n // 2, "gamma": _ceil_div(n, 3), "regularity": 2},
    ),
    "TriangleNecklace": _Family(
        ("k",),
        triangle_necklace,
        lambda k: 3,
        lambda k: {"n": 6 * k, "alpha": 2 * k, "gamma": 2 * k, "regularity": 3},
    ),
    "G12": _Family((), g12, lambda: 3, lambda: {"n": 12, "alpha": 4, "gamma": 3}),
    "G12Chain": _Family(
        ("k",),
        h_cubic,
        lambda k: 3,
        lambda k: {"n": 12 * k, "alpha": 4 * k, "gamma": 3 * k, "regularity": 3},
    ),
    "G20": _Family((), g20, lambda: 3, lambda: {"n": 20, "alpha": 8, "gamma": 5}),
    "G20Chain": _Family(
        ("k",),
        g_cubic,
        lambda k: 3,
        lambda k: {"n": 20 * k, "alpha": 8 * k, "gamma": 5 * k, "regularity": 3},
    ),
    "G15": _Family((), g15, lambda: 3, lambda: {"n": 15, "alpha": 5, "gamma": 3, "regularity": 4}),
    "G15Ring": _Family(
        ("k",),
        g15_ring,
        lambda k: 3,
        lambda k: {"n": 15 * k, "alpha": 5 * k, "gamma": 3 * k, "regularity": 4},
    ),
    "G30": _Family((), g30, lambda: 3, lambda: {"n": 30, "alpha": 10, "gamma": 6, "regularity": 4}),
    "C5JoinKk": _Family(
        ("k",),
        c5_join_kk,
        lambda k: 3,
        lambda k: {"n": 5 + k, ("gamma_k", k): k, "alphaF_trianglefree": 5},
    ),
    "AlphaKSharp": _Family(
        ("r", "k", "t"),
        alpha_k_sharp,
        lambda r, k, t: r,
        lambda r, k, t: {"n": (r - 1) * (k + 1) + t, "min_degree": k + t, ("alpha_k", k): (r - 1) * (k + 1)},
    ),
    "Prop61": _Family(
        ("r", "k", "p", "t", "mu"),
        prop61,
        lambda r, k, p, t, mu: r,
        lambda r, k, p, t, mu: {
            "n": p * (2 * t + mu + (r - 1) * (k + 1)),
            "min_degree": k + 2 * t + mu,
            ("alpha_k", k): p * (r - 1) * (k + 1),
        },
    ),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named construction plus its integer parameters."""

    name: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ValueError(f"unknown family {self.name!r}; expected one of {', '.join(FAMILIES)}")
        wanted = FAMILIES[self.name].params
        if set(self.params) != set(wanted):
            raise ValueError(f"{self.name} takes parameters {list(wanted)}, got {sorted(self.params)}")

    def _args(self):
        return [int(self.params[p]) for p in FAMILIES[self.name].params]

    def build(self) -> Graph:
        return FAMILIES[self.name].build(*self._args())

    @property
    def r(self) -> int:
        """The ``r`` for which the construction is K_{1,r}-free."""
        return FAMILIES[self.name].r(*self._args())

    def expected(self) -> dict:
        """Declared invariants: keys are names or ``(name, parameter)`` pairs."""
        return FAMILIES[self.name].expected(*self._args())

    def key(self) -> tuple:
        return (self.name, tuple(int(self.params[p]) for p in FAMILIES[self.name].params))

    def __str__(self) -> str:
        inner = ",".join(f"{p}={self.params[p]}" for p in FAMILIES[self.name].params)
        return f"{self.name}({inner})"
