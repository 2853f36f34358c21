"""Triangle-diamond partitions of connected claw-free cubic graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import are_isomorphic
from .families import triangle_necklace
from .graph import Graph, VertexSet, bits_of, mask_of, popcount
from .predicates import find_diamonds, is_claw_free, is_connected, is_cubic, is_diamond_free


class PartitionError(ValueError):
    """The input graph does not meet the partition's preconditions."""

    reason = "precondition"


class NotCubic(PartitionError):
    reason = "not-cubic"


class NotClawFree(PartitionError):
    reason = "not-claw-free"


class NotConnected(PartitionError):
    reason = "not-connected"


class IsK4(PartitionError):
    reason = "is-K4"


@dataclass(frozen=True)
class TDPartition:
    """Disjoint units covering V(G), each inducing a triangle or a diamond."""

    n: int
    units: tuple[VertexSet, ...]
    kinds: tuple[str, ...]

    @property
    def triangles(self) -> list[VertexSet]:
        return [u for u, k in zip(self.units, self.kinds) if k == "triangle"]

    @property
    def diamonds(self) -> list[VertexSet]:
        return [u for u, k in zip(self.units, self.kinds) if k == "diamond"]

    def as_lists(self) -> list[list[int]]:
        return [u.tolist() for u in self.units]


def td_partition(g: Graph) -> TDPartition:
    if not is_cubic(g):
        raise NotCubic(f"graph is not cubic (degrees {sorted(set(g.degrees()))})")
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    if not is_claw_free(g):
        raise NotClawFree("graph contains an induced claw")
    if g.n == 4:
        raise IsK4("K4 has no triangle-diamond partition")

    units: list[tuple[int, str]] = []
    covered = 0
    for a, b, c, d in find_diamonds(g):
        m = mask_of((a, b, c, d))
        if covered & m:
            raise AssertionError(f"overlapping diamonds at {sorted(bits_of(covered & m))}")
        covered |= m
        units.append((m, "diamond"))
    rest = g.full_mask & ~covered
    for v in bits_of(rest):
        if covered >> v & 1:
            continue
        nb = g.rows[v] & rest & ~covered
        tris = [(x, y) for x, y in combinations(bits_of(nb), 2) if g.adjacent(x, y)]
        if len(tris) != 1:
            raise AssertionError(f"vertex {v} lies in {len(tris)} triangles outside diamonds")
        m = mask_of((v, *tris[0]))
        covered |= m
        units.append((m, "triangle"))
    units.sort(key=lambda u: (u[0] & -u[0]).bit_length())
    return TDPartition(
        g.n,
        tuple(VertexSet(g.n, m) for m, _ in units),
        tuple(kind for _, kind in units),
    )


def check_partition(g: Graph, p: TDPartition) -> None:
    """Raise ``AssertionError`` unless ``p`` is a valid triangle-diamond partition of ``g``."""
    seen = 0
    for unit, kind in zip(p.units, p.kinds):
        m = unit.bits
        if seen & m:
            raise AssertionError("units overlap")
        seen |= m
        edges = sum(popcount(g.rows[v] & m) for v in bits_of(m)) // 2
        if kind == "triangle":
            if len(unit) != 3 or edges != 3:
                raise AssertionError(f"unit {unit.tolist()} is not a triangle")
        elif len(unit) != 4 or edges != 5:
            raise AssertionError(f"unit {unit.tolist()} is not a diamond")
    if seen != g.full_mask:
        raise AssertionError("units do not cover every vertex")
    diamond_sets = {mask_of(d) for d in find_diamonds(g)}
    for unit, kind in zip(p.units, p.kinds):
        if kind == "triangle" and any(unit.bits & ~d == 0 for d in diamond_sets):
            raise AssertionError(f"triangle unit {unit.tolist()} lies inside a diamond")


def is_Tcubic(g: Graph) -> bool:
    """Whether ``g`` is isomorphic to a triangle-necklace ``F_{2k}``."""
    if g.n == 0 or g.n % 6 or not is_cubic(g) or not is_connected(g):
        return False
    if not is_claw_free(g) or not is_diamond_free(g):
        return False
    return are_isomorphic(g, triangle_necklace(g.n // 6))
