"""Immutable simple graphs stored as bit rows, plus graph6 / edge-list I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_N = 512


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    pass


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(n)`` for some graph of order ``n``."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"vertex set {self.bits:#x} not inside range({self.n})")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        return cls(n, mask_of(vertices))

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {list(self)})"

    def tolist(self) -> list[int]:
        return list(self)


def popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is an integer whose bit ``u`` is set iff ``uv`` is an edge.
    Instances are never mutated; every operation returns a new graph.
    """

    n: int
    rows: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise GraphError(f"order {self.n} outside 0..{MAX_N}")
        if len(self.rows) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond n={self.n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits_of(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency at ({v}, {u})")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str = "") -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), label)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n, f"E{n}")

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)), f"K{n}")

    # identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.m}>"

    # basic accessors --------------------------------------------------

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(bits_of(self.rows[v]))

    def closed_row(self, v: int) -> int:
        return self.rows[v] | (1 << v)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits_of(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def vertex_set(self, vertices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def with_label(self, label: str) -> "Graph":
        return Graph(self.n, self.rows, label)

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[u] for u in bits_of(self.rows[v]))
        return Graph(self.n, tuple(rows), self.label)


# structural operations ---------------------------------------------------


def induced(g: Graph, s: VertexSet | Iterable[int] | int) -> Graph:
    """Subgraph induced by ``s``; vertices keep their ascending order."""
    if isinstance(s, VertexSet):
        mask = s.bits
    elif isinstance(s, int):
        mask = s
    else:
        mask = mask_of(s)
    if mask >> g.n:
        raise GraphError("vertex set not contained in V(g)")
    keep = list(bits_of(mask))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(index[u] for u in bits_of(g.rows[v] & mask)))
    return Graph(len(keep), tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.rows)
        offset += h.n
    return Graph(offset, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """``g + h``: disjoint union plus every edge between ``g`` and ``h``."""
    u = disjoint_union(g, h)
    gmask = g.full_mask
    hmask = h.full_mask << g.n
    rows = [row | hmask if v < g.n else row | gmask for v, row in enumerate(u.rows)]
    return Graph(u.n, tuple(rows))


# graph6 ---------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    if g.n == 0:
        raise Graph6Error("graph6 output for the null graph is not supported")
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        bits.extend((row >> i) & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise Graph6Error("graph6 characters must lie in range 63..126")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("unsupported or truncated graph6 size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        data = vals[4:]
    else:
        n = vals[0]
        data = vals[1:]
    if not 1 <= n <= MAX_N:
        raise Graph6Error(f"graph6 order {n} outside 1..{MAX_N}")
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(data)}")
    big = 0
    for x in data:
        big = (big << 6) | x
    pad = len(data) * 6 - nbits
    if big & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    big >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if big >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


# edge lists -------------------------------------------------------------------


def emit_edge_list(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (0-indexed). A ``# n N`` comment fixes the order."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "n":
                n = int(parts[1])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)
