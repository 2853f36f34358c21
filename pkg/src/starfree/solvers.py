"""Exact solvers for the independence, domination and induced-subgraph invariants.

Every solver returns an :class:`InvariantValue` whose witness is the
lexicographically least optimal vertex set (compared as ascending lists),
so results do not depend on the kernel backend or branch order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import _kernels
from .graph import Graph, VertexSet, bits_of, induced, mask_of, popcount
from .limits import check_cap
from .predicates import complement_rows, find_clique, is_outerplanar, is_planar, odd_cycle

KINDS = (
    "alpha",
    "gamma",
    "gamma_k",
    "alpha_k",
    "chi",
    "alphaF_chromatic",
    "alphaF_kqfree",
    "alphaF_trianglefree",
    "bipartite",
    "outerplanar",
    "planar",
)


@dataclass(frozen=True)
class InvariantValue:
    """A computed invariant together with a set that certifies it.

    For maximisation invariants the witness is an optimal vertex set; for
    domination it is a minimum (k-)dominating set.  ``chi`` stores its
    colouring (one class per colour) in ``certificate``.
    """

    kind: str
    value: int
    witness: VertexSet
    params: dict = field(default_factory=dict)
    certificate: tuple = ()

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "params": dict(self.params), "value": self.value,
               "witness": self.witness.tolist()}
        if self.certificate:
            out["certificate"] = [list(c) for c in self.certificate]
        return out


def _lex_least(n: int, feasible: Callable[[int, int], list[int] | None], seed: list[int]) -> list[int]:
    """Greedy lex-least optimum.

    ``feasible(forced, excluded)`` returns an optimal set containing
    ``forced`` and avoiding ``excluded``, or ``None``.  ``seed`` is any
    optimal set; it answers most queries without a new search.
    """
    current = set(seed)
    forced = 0
    excluded = 0
    for v in range(n):
        if v in current:
            forced |= 1 << v
            continue
        found = feasible(forced | (1 << v), excluded)
        if found is None:
            excluded |= 1 << v
        else:
            current = set(found)
            forced |= 1 << v
    return sorted(current)


# independence --------------------------------------------------------------------


def alpha(g: Graph) -> InvariantValue:
    check_cap("alpha", g.n)
    rows = list(g.rows)
    best = _kernels.max_independent(rows, g.full_mask)
    size = len(best)

    def feasible(forced, excluded):
        need = size - popcount(forced)
        blocked = forced | excluded
        for v in bits_of(forced):
            blocked |= rows[v]
        if any(rows[v] & forced for v in bits_of(forced)):
            return None
        allowed = g.full_mask & ~blocked
        if need == 0:
            return list(bits_of(forced))
        rest = _kernels.max_independent(rows, allowed, need - 1, need)
        return None if rest is None else sorted(list(bits_of(forced)) + rest)

    witness = _lex_least(g.n, feasible, best)
    return InvariantValue("alpha", size, VertexSet.of(g.n, witness))


# domination --------------------------------------------------------------------------


def _needs(g: Graph, k: int, forced: int) -> list[int]:
    return [0 if forced >> u & 1 else max(0, k - popcount(g.rows[u] & forced)) for u in range(g.n)]


def _greedy_k_dominating(g: Graph, k: int) -> int:
    need = [k] * g.n
    chosen = 0
    while any(need):
        best, gain = -1, -1
        for v in range(g.n):
            if chosen >> v & 1:
                continue
            gv = need[v] + sum(1 for u in bits_of(g.rows[v]) if need[u] > 0)
            if gv > gain:
                best, gain = v, gv
        chosen |= 1 << best
        need[best] = 0
        for u in bits_of(g.rows[best]):
            if need[u] > 0:
                need[u] -= 1
    return popcount(chosen)


def gamma_k(g: Graph, k: int = 1) -> InvariantValue:
    """Minimum ``D`` such that every vertex outside ``D`` has ``k`` neighbours in it.

    Vertices of degree below ``k`` necessarily belong to ``D``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    check_cap("gamma", g.n)
    kind, params = ("gamma", {}) if k == 1 else ("gamma_k", {"k": k})
    if g.n == 0:
        return InvariantValue(kind, 0, VertexSet(0), params)
    rows = list(g.rows)
    full = g.full_mask
    # each member covers k units of its own demand plus one per neighbour
    lower = -(-k * g.n // (g.max_degree + k))
    upper = _greedy_k_dominating(g, k)
    found = None
    size = lower
    while size <= upper:
        found = _kernels.k_dominating(rows, [k] * g.n, full, size)
        if found is not None:
            break
        size += 1
    if found is None:
        raise AssertionError("greedy upper bound not attained by exact search")
    size = len(found)

    def feasible(forced, excluded):
        budget = size - popcount(forced)
        if budget < 0:
            return None
        rest = _kernels.k_dominating(rows, _needs(g, k, forced), full & ~forced & ~excluded, budget)
        return None if rest is None else sorted(list(bits_of(forced)) + rest)

    witness = _lex_least(g.n, feasible, found)
    return InvariantValue(kind, size, VertexSet.of(g.n, witness), params)


def gamma(g: Graph) -> InvariantValue:
    return gamma_k(g, 1)


# k-independence ------------------------------------------------------------------------


def alpha_k(g: Graph, k: int) -> InvariantValue:
    """Largest vertex set inducing a subgraph of maximum degree at most ``k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        a = alpha(g)
        return InvariantValue("alpha_k", a.value, a.witness, {"k": 0})
    check_cap("alpha_k", g.n)
    rows = list(g.rows)
    best = _kernels.max_k_independent(rows, k, g.full_mask)
    size = len(best)

    def feasible(forced, excluded):
        return _kernels.max_k_independent(rows, k, g.full_mask & ~excluded, forced, size - 1, size)

    witness = _lex_least(g.n, feasible, best)
    return InvariantValue("alpha_k", size, VertexSet.of(g.n, witness), {"k": k})


# colouring -----------------------------------------------------------------------------------


def _colour(rows, vertices: list[int], k: int) -> list[int] | None:
    """DSATUR-ordered backtracking: a proper ``k``-colouring of ``vertices`` or ``None``."""
    colour: dict[int, int] = {}
    forbid = {v: 0 for v in vertices}
    live = mask_of(vertices)

    def pick():
        best, key = -1, None
        for v in vertices:
            if v in colour:
                continue
            kv = (popcount(forbid[v]), popcount(rows[v] & live))
            if key is None or kv > key:
                best, key = v, kv
        return best

    def rec(coloured, used):
        if coloured == len(vertices):
            return True
        v = pick()
        # colours beyond the first unused one are symmetric
        for c in range(min(k, used + 1)):
            if forbid[v] >> c & 1:
                continue
            colour[v] = c
            touched = []
            for u in bits_of(rows[v] & live):
                if u not in colour and not forbid[u] >> c & 1:
                    forbid[u] |= 1 << c
                    touched.append(u)
            if rec(coloured + 1, max(used, c + 1)):
                return True
            for u in touched:
                forbid[u] &= ~(1 << c)
            del colour[v]
        return False

    if rec(0, 0):
        return [colour[v] for v in vertices]
    return None


def is_k_colourable(g: Graph, k: int) -> bool:
    if g.n == 0:
        return True
    if k <= 0:
        return False
    return _colour(g.rows, list(range(g.n)), k) is not None


def chi(g: Graph) -> InvariantValue:
    check_cap("chi", g.n)
    if g.n == 0:
        return InvariantValue("chi", 0, VertexSet(0))
    clique = _kernels.max_independent(complement_rows(g), g.full_mask)
    vertices = list(range(g.n))
    k = len(clique)
    while True:
        colouring = _colour(g.rows, vertices, k)
        if colouring is not None:
            break
        k += 1
    classes = tuple(tuple(v for v in vertices if colouring[v] == c) for c in range(k))
    return InvariantValue("chi", k, VertexSet(g.n, g.full_mask), certificate=classes)


# hitting-set search for hereditary families with small obstructions ------------------------


def _min_deletion(n: int, find_obstruction, alive: int, forced: int, budget: int, target: int = -1):
    """Fewest deletions from ``alive`` (never touching ``forced``) leaving no obstruction.

    ``find_obstruction(mask)`` returns a list of vertices inside ``mask``
    whose joint survival is forbidden, or ``None``.  Each obstruction forces
    one of its free vertices out: branch ``i`` deletes the ``i``-th free
    vertex and keeps the earlier ones.  Returns the surviving set as a mask,
    or ``None`` if more than ``budget`` deletions are needed.  With
    ``target >= 0`` the first solution using at most ``target`` deletions
    ends the search.
    """
    best = [budget + 1, None]

    class _Stop(Exception):
        pass

    def packing(alive, forced):
        lb = 0
        mask = alive
        while True:
            obs = find_obstruction(mask)
            if obs is None:
                return lb
            free = mask_of(obs) & ~forced
            if not free:
                return -1
            lb += 1
            mask &= ~free

    def rec(alive, forced, spent):
        lb = packing(alive, forced)
        if lb < 0 or spent + lb >= best[0]:
            return
        obs = find_obstruction(alive)
        if obs is None:
            best[0], best[1] = spent, alive
            if spent <= target:
                raise _Stop
            return
        keep = forced
        for v in obs:
            if forced >> v & 1:
                continue
            rec(alive & ~(1 << v), keep, spent + 1)
            keep |= 1 << v

    try:
        rec(alive, forced, 0)
    except _Stop:
        pass
    return best[1]


def _max_hereditary(g: Graph, kind: str, params: dict, find_obstruction) -> InvariantValue:
    full = g.full_mask
    kept = _min_deletion(g.n, find_obstruction, full, 0, g.n)
    size = popcount(kept)

    def feasible(forced, excluded):
        budget = g.n - size - popcount(excluded)
        if budget < 0:
            return None
        mask = _min_deletion(g.n, find_obstruction, full & ~excluded, forced, budget, budget)
        return None if mask is None else list(bits_of(mask))

    witness = _lex_least(g.n, feasible, list(bits_of(kept)))
    return InvariantValue(kind, size, VertexSet.of(g.n, witness), params)


def alphaF_kqfree(g: Graph, q: int) -> InvariantValue:
    """Largest induced subgraph containing no ``K_q``."""
    if q < 3:
        raise ValueError("q must be at least 3")
    check_cap("alphaF", g.n)
    crows = complement_rows(g)
    kind = "alphaF_trianglefree" if q == 3 else "alphaF_kqfree"
    params = {} if q == 3 else {"q": q}
    return _max_hereditary(g, kind, params, lambda mask: find_clique(g, q, mask, crows))


def alphaF_trianglefree(g: Graph) -> InvariantValue:
    return alphaF_kqfree(g, 3)


def max_induced_bipartite(g: Graph) -> InvariantValue:
    check_cap("alphaF", g.n)
    rows = g.rows
    return _max_hereditary(g, "bipartite", {}, lambda mask: odd_cycle(rows, mask))


# include-first search for arbitrary hereditary predicates -----------------------------------


def _include_first(g: Graph, admits: Callable[[int, int], bool], bound: Callable[[int, int], int]):
    """Largest ``S`` built by include-first DFS in index order.

    ``admits(S, v)`` decides whether ``S + v`` stays in the family;
    ``bound(S, rest)`` bounds the best completion from above.  Strict
    improvement plus include-first order makes the first optimum found the
    lexicographically least.
    """
    best = [-1, 0]

    def rec(v, s, rest):
        if bound(s, rest) <= best[0]:
            return
        if v == g.n:
            best[0], best[1] = popcount(s), s
            return
        bit = 1 << v
        rest &= ~bit
        if admits(s, v):
            rec(v + 1, s | bit, rest)
        rec(v + 1, s, rest)

    rec(0, 0, g.full_mask)
    return best[1]


def alphaF_chromatic(g: Graph, k: int) -> InvariantValue:
    """Largest induced subgraph of chromatic number at most ``k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        a = alpha(g)
        return InvariantValue("alphaF_chromatic", a.value, a.witness, {"k": 1})
    if k == 2:
        b = max_induced_bipartite(g)
        return InvariantValue("alphaF_chromatic", b.value, b.witness, {"k": 2})
    check_cap("alphaF", g.n)
    if is_k_colourable(g, k):
        return InvariantValue("alphaF_chromatic", g.n, VertexSet(g.n, g.full_mask), {"k": k})
    gap = g.n - popcount(_greedy_k_colourable(g.rows, g.n, k))
    if 2 * gap < g.n:
        # few deletions needed: hit the non-colourable obstructions
        return _max_hereditary(g, "alphaF_chromatic", {"k": k}, _uncolourable_core(g, k))
    s = _max_k_colourable(g.rows, g.n, k)
    return InvariantValue("alphaF_chromatic", popcount(s), VertexSet(g.n, s), {"k": k})


def _k_core(rows, mask: int, k: int) -> int:
    # vertices of degree < k never decide k-colourability
    while True:
        low = 0
        for v in bits_of(mask):
            if popcount(rows[v] & mask) < k:
                low |= 1 << v
        if not low:
            return mask
        mask &= ~low


def _uncolourable_core(g: Graph, k: int):
    """Obstruction finder: a vertex-critical non-``k``-colourable subgraph."""
    rows = g.rows
    crows = complement_rows(g)

    def uncolourable(mask):
        return bool(mask) and _colour(rows, list(bits_of(mask)), k) is None

    def find(mask):
        clique = find_clique(g, k + 1, mask, crows)
        if clique is not None:
            return list(clique)
        mask = _k_core(rows, mask, k)
        if not uncolourable(mask):
            return None
        for v in bits_of(mask):
            smaller = _k_core(rows, mask & ~(1 << v), k)
            if uncolourable(smaller):
                mask = smaller
        return list(bits_of(mask))

    return find


def _greedy_k_colourable(rows, n: int, k: int) -> int:
    classes = [0] * k
    for v in range(n):
        for c in range(k):
            if not rows[v] & classes[c]:
                classes[c] |= 1 << v
                break
    return sum(classes)


def _cover_bound(rows, rest: int, k: int) -> int:
    # a clique contributes at most k; cliques grow from high-degree vertices
    total = 0
    while rest:
        v = max(bits_of(rest), key=lambda u: popcount(rows[u] & rest))
        q = rest & rows[v]
        size = 1
        rest &= ~(1 << v)
        while q:
            u = max(bits_of(q), key=lambda w: popcount(rows[w] & q))
            q &= rows[u]
            rest &= ~(1 << u)
            size += 1
        total += min(size, k)
    return total


def _class_bound(rows, classes, open_: int) -> int:
    # every class ends as an independent set of its members plus compatible open vertices
    total = 0
    for cls in classes:
        fits = 0
        for u in bits_of(open_):
            if not rows[u] & cls:
                fits |= 1 << u
        total += popcount(cls) + len(_kernels.max_independent(rows, fits) or ())
    return total


def _k_colourable_search(rows, k: int, alive: int, forced: int, lb: int, target: int) -> int | None:
    """Largest ``k``-colourable set of size ``> lb`` inside ``alive`` containing ``forced``.

    Each vertex is put into one of ``k`` colour classes or skipped; vertices
    that fit no class drop out.  With ``target`` the search stops at the
    first set of at least that size.  Returns a mask or ``None``.
    """
    best = [lb, None]

    def rec(classes, size, rest):
        open_ = 0
        for u in bits_of(rest):
            if any(not rows[u] & c for c in classes):
                open_ |= 1 << u
        if forced & rest & ~open_:
            return False
        if not open_:
            if size > best[0]:
                best[0], best[1] = size, sum(classes)
            return target and size >= target
        if size + _cover_bound(rows, open_, k) <= best[0]:
            return False
        if _class_bound(rows, classes, open_) <= best[0]:
            return False
        pending = open_ & forced
        v = ((pending or open_) & -(pending or open_)).bit_length() - 1
        rest = open_ & ~(1 << v)
        seen_empty = False
        for c, cls in enumerate(classes):
            if rows[v] & cls:
                continue
            # empty classes are interchangeable
            if not cls:
                if seen_empty:
                    continue
                seen_empty = True
            if rec(classes[:c] + (cls | 1 << v,) + classes[c + 1:], size + 1, rest):
                return True
        if not forced >> v & 1:
            return rec(classes, size, rest)
        return False

    rec((0,) * k, 0, alive)
    return best[1]


def _max_k_colourable(rows, n: int, k: int) -> int:
    """Lex-least largest ``k``-colourable vertex set."""
    full = (1 << n) - 1
    start = _greedy_k_colourable(rows, n, k)
    found = _k_colourable_search(rows, k, full, 0, popcount(start), 0)
    if found is not None:
        start = found
    size = popcount(start)

    def feasible(forced, excluded):
        m = _k_colourable_search(rows, k, full & ~excluded, forced, size - 1, size)
        return None if m is None else list(bits_of(m))

    return mask_of(_lex_least(n, feasible, list(bits_of(start))))


def max_induced(g: Graph, pred: Callable[[Graph], bool], kind: str = "max_induced") -> InvariantValue:
    """Largest ``S`` with ``pred(induced(g, S))``; ``pred`` must be hereditary."""
    check_cap("max_induced", g.n)
    if pred(g):
        return InvariantValue(kind, g.n, VertexSet(g.n, g.full_mask))

    def admits(s, v):
        return pred(induced(g, s | (1 << v)))

    def bound(s, rest):
        return popcount(s) + popcount(rest)

    s = _include_first(g, admits, bound)
    return InvariantValue(kind, popcount(s), VertexSet(g.n, s))


def max_induced_planar(g: Graph) -> InvariantValue:
    return max_induced(g, is_planar, "planar")


def max_induced_outerplanar(g: Graph) -> InvariantValue:
    return max_induced(g, is_outerplanar, "outerplanar")


# dispatch ---------------------------------------------------------------------------------------


def invariant(g: Graph, kind: str, k: int | None = None, q: int | None = None) -> InvariantValue:
    if kind == "alpha":
        return alpha(g)
    if kind == "gamma":
        return gamma(g)
    if kind == "gamma_k":
        return gamma_k(g, _need(k, "k"))
    if kind == "alpha_k":
        return alpha_k(g, _need(k, "k"))
    if kind == "chi":
        return chi(g)
    if kind == "alphaF_chromatic":
        return alphaF_chromatic(g, _need(k, "k"))
    if kind == "alphaF_kqfree":
        return alphaF_kqfree(g, _need(q, "q"))
    if kind == "alphaF_trianglefree":
        return alphaF_trianglefree(g)
    if kind == "bipartite":
        return max_induced_bipartite(g)
    if kind == "outerplanar":
        return max_induced_outerplanar(g)
    if kind == "planar":
        return max_induced_planar(g)
    raise ValueError(f"unknown invariant {kind!r}; expected one of {', '.join(KINDS)}")


def _need(value, name):
    if value is None:
        raise ValueError(f"parameter {name} is required")
    return value
