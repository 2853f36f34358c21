"""Exhaustive reference implementations for small graphs.

Each invariant is evaluated on every one of the ``2**n`` vertex subsets at
once, using numpy arrays indexed by subset bitmask.  Nothing here shares
code with the search kernels, so these serve as independent oracles.  Every
function returns ``(value, witness)`` with the lexicographically least
optimal witness, matching the convention of the exact solvers.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .graph import Graph

MAX_N = 16


@lru_cache(maxsize=None)
def _masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


@lru_cache(maxsize=None)
def _sizes(n: int) -> np.ndarray:
    return np.bitwise_count(_masks(n)).astype(np.int64)


@lru_cache(maxsize=None)
def _lex_key(n: int) -> np.ndarray:
    # bit v of a mask weighs 2**(n-1-v): among equal-size sets the largest
    # key is the lexicographically least ascending list
    key = np.zeros(1 << n, dtype=np.int64)
    m = _masks(n)
    for v in range(n):
        key |= ((m >> v) & 1) << (n - 1 - v)
    return key


def _check(g: Graph) -> None:
    if g.n > MAX_N:
        raise ValueError(f"exhaustive oracles are limited to n <= {MAX_N}")


def _pick(n: int, ok: np.ndarray, largest: bool):
    sizes = np.where(ok, _sizes(n), -1 if largest else n + 1)
    best = sizes.max() if largest else sizes.min()
    cands = np.flatnonzero(sizes == best)
    mask = int(cands[np.argmax(_lex_key(n)[cands])])
    return int(best), [v for v in range(n) if mask >> v & 1]


def _inside_degrees(g: Graph) -> list[np.ndarray]:
    """``deg[v][S]`` = number of neighbours of ``v`` inside ``S``."""
    m = _masks(g.n)
    return [np.bitwise_count(m & row).astype(np.int64) for row in g.rows]


def _member(g: Graph, v: int) -> np.ndarray:
    return ((_masks(g.n) >> v) & 1).astype(bool)


def independent_table(g: Graph) -> np.ndarray:
    ok = np.ones(1 << g.n, dtype=bool)
    for v, deg in enumerate(_inside_degrees(g)):
        ok &= ~_member(g, v) | (deg == 0)
    return ok


def alpha(g: Graph):
    _check(g)
    return _pick(g.n, independent_table(g), True)


def gamma_k(g: Graph, k: int = 1):
    _check(g)
    ok = np.ones(1 << g.n, dtype=bool)
    for v, deg in enumerate(_inside_degrees(g)):
        ok &= _member(g, v) | (deg >= k)
    return _pick(g.n, ok, False)


def gamma(g: Graph):
    return gamma_k(g, 1)


def alpha_k(g: Graph, k: int):
    _check(g)
    ok = np.ones(1 << g.n, dtype=bool)
    for v, deg in enumerate(_inside_degrees(g)):
        ok &= ~_member(g, v) | (deg <= k)
    return _pick(g.n, ok, True)


def colourable_table(g: Graph, k: int) -> np.ndarray:
    """``col[S]`` is true iff ``G[S]`` admits a proper ``k``-colouring.

    A set is ``k``-colourable iff it is an independent set joined with a
    disjoint ``(k-1)``-colourable set.
    """
    m = _masks(g.n)
    indep = independent_table(g)
    col = m == 0
    if k < 1:
        return col
    stable = m[indep]
    for _ in range(k):
        nxt = col.copy()
        for i in stable:
            sup = m[(m & i) == i]
            nxt[sup] |= col[sup ^ i]
        col = nxt
    return col


def chi(g: Graph) -> int:
    _check(g)
    full = (1 << g.n) - 1
    k = 0
    while not colourable_table(g, k)[full]:
        k += 1
    return k


def alphaF_chromatic(g: Graph, k: int):
    _check(g)
    return _pick(g.n, colourable_table(g, k), True)


def clique_free_table(g: Graph, q: int) -> np.ndarray:
    """``free[S]`` is true iff ``G[S]`` has no ``K_q``.

    ``S`` is ``K_q``-free iff every neighbourhood inside ``S`` is
    ``K_{q-1}``-free; ``K_1``-free means empty.
    """
    m = _masks(g.n)
    free = m == 0
    for _ in range(2, q + 1):
        nxt = np.ones(1 << g.n, dtype=bool)
        for v, row in enumerate(g.rows):
            nxt &= ~_member(g, v) | free[m & row]
        free = nxt
    return free


def alphaF_kqfree(g: Graph, q: int):
    _check(g)
    return _pick(g.n, clique_free_table(g, q), True)


def max_bipartite(g: Graph):
    return alphaF_chromatic(g, 2)
