"""Small clique Ramsey numbers ``r(K_r, K_q)`` with witness graphs.

A witness for ``(r, q)`` is a graph ``W`` on ``r(K_r, K_q) - 1`` vertices
whose edges are the blue colour class: ``W`` has no ``K_q`` and its
complement has no ``K_r``.  Witness files live in ``data/ramsey/<r>_<q>.g6``
for ``r <= q``; the swapped entry uses the complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .graph import Graph, complement, parse_graph6
from .predicates import contains_clique


class Provenance(str, Enum):
    VERIFIED_BOTH_SIDES = "verified_both_sides"
    WITNESS_VERIFIED = "witness_verified"
    TRUSTED_CONSTANT = "trusted_constant"


class RamseyLookupError(KeyError):
    """Requested pair is not in the table."""


# (r, q) with 3 <= r <= q; (5, 5) is open and deliberately absent
_TABLE = {
    (3, 3): (6, Provenance.VERIFIED_BOTH_SIDES),
    (3, 4): (9, Provenance.WITNESS_VERIFIED),
    (3, 5): (14, Provenance.WITNESS_VERIFIED),
    (4, 4): (18, Provenance.WITNESS_VERIFIED),
    (4, 5): (25, Provenance.TRUSTED_CONSTANT),
}


@dataclass(frozen=True)
class RamseyEntry:
    r: int
    q: int
    value: int
    provenance: Provenance
    witness: Graph | None


def _key(r: int, q: int) -> tuple[int, int, bool]:
    if r > q:
        return q, r, True
    return r, q, False


def entry(r: int, q: int) -> RamseyEntry:
    if r < 2 or q < 2:
        raise RamseyLookupError(f"r(K_{r}, K_{q}) is only tabulated for r, q >= 2")
    if r == 2 or q == 2:
        other = q if r == 2 else r
        # colourings of K_{other-1}: all red, or all blue
        witness = Graph.complete(other - 1) if r == 2 else Graph.empty(other - 1)
        return RamseyEntry(r, q, other, Provenance.VERIFIED_BOTH_SIDES, witness)
    a, b, swapped = _key(r, q)
    if (a, b) not in _TABLE:
        raise RamseyLookupError(f"r(K_{r}, K_{q}) is not in the table")
    value, prov = _TABLE[(a, b)]
    witness = _load_witness(a, b)
    if witness is not None and swapped:
        witness = complement(witness)
    return RamseyEntry(r, q, value, prov, witness)


@lru_cache(maxsize=None)
def _load_witness(a: int, b: int) -> Graph | None:
    path = resources.files("starfree") / "data" / "ramsey" / f"{a}_{b}.g6"
    if not path.is_file():
        return None
    return parse_graph6(path.read_text()).with_label(f"ramsey_{a}_{b}")


def ramsey(r: int, q: int) -> int:
    return entry(r, q).value


def witness_ok(r: int, q: int, w: Graph) -> bool:
    """``w`` has ``r(K_r, K_q) - 1`` vertices, no ``K_q``, and a ``K_r``-free complement."""
    return (
        w.n == ramsey(r, q) - 1
        and not contains_clique(w, q)
        and not contains_clique(complement(w), r)
    )


def verify_witness(r: int, q: int, w: Graph | None = None) -> bool:
    """Check ``w`` (default: the stored witness) against the entry for ``(r, q)``."""
    if w is None:
        w = entry(r, q).witness
        if w is None:
            return False
    return witness_ok(r, q, w)


def table_pairs() -> list[tuple[int, int]]:
    """Every tabulated pair with both entries at most 5."""
    pairs = []
    for r in range(2, 6):
        for q in range(2, 6):
            try:
                entry(r, q)
            except RamseyLookupError:
                continue
            pairs.append((r, q))
    return pairs


def _two_colourings_avoid_triangles(p: int) -> int:
    """Number of red/blue colourings of ``K_p`` with no monochromatic triangle."""
    edges = list(combinations(range(p), 2))
    index = {e: i for i, e in enumerate(edges)}
    triangles = [
        (1 << index[(a, b)]) | (1 << index[(a, c)]) | (1 << index[(b, c)])
        for a, b, c in combinations(range(p), 3)
    ]
    good = 0
    for colouring in range(1 << len(edges)):
        if all(colouring & t not in (0, t) for t in triangles):
            good += 1
    return good


def brute_ramsey_33() -> int:
    """Least ``p`` such that every 2-colouring of ``K_p`` has a monochromatic triangle."""
    p = 3
    while _two_colourings_avoid_triangles(p):
        p += 1
    return p
