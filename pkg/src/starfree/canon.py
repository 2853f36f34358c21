"""Canonical labelling by individualisation-refinement.

Colour refinement splits an ordered partition until it is equitable; the
search then individualises each vertex of the first smallest non-singleton
cell in turn.  At every node only the children whose refinement trace is
least are explored, and the canonical form is the least adjacency code over
the surviving leaves.  Traces and codes are isomorphism invariant, so
isomorphic graphs get identical forms.
"""

from __future__ import annotations

from .graph import Graph, bits_of, popcount
from .limits import check_cap


def _refine(rows, cells: list[int]) -> tuple[list[int], tuple]:
    """Equitable refinement of ordered ``cells``; returns it with a trace."""
    trace = []
    cells = list(cells)
    queue = list(range(len(cells)))
    while queue:
        w = cells[queue.pop(0)]
        out = []
        for x in cells:
            if x & (x - 1) == 0:
                out.append(x)
                continue
            groups: dict[int, int] = {}
            for v in bits_of(x):
                c = popcount(rows[v] & w)
                groups[c] = groups.get(c, 0) | (1 << v)
            if len(groups) == 1:
                out.append(x)
                continue
            keys = sorted(groups)
            trace.append((len(out), tuple((c, popcount(groups[c])) for c in keys)))
            out.extend(groups[c] for c in keys)
        if len(out) != len(cells):
            # every cell is a splitter again; refinement is cheap at these sizes
            cells = out
            queue = list(range(len(cells)))
    quotient = tuple(
        tuple(popcount(rows[(x & -x).bit_length() - 1] & y) for y in cells) for x in cells
    )
    return cells, (tuple(trace), tuple(popcount(c) for c in cells), quotient)


def _target(cells: list[int]) -> int:
    best, size = -1, 0
    for i, c in enumerate(cells):
        s = popcount(c)
        if s > 1 and (best < 0 or s < size):
            best, size = i, s
    return best


def _individualise(cells: list[int], i: int, v: int) -> list[int]:
    bit = 1 << v
    return cells[:i] + [bit, cells[i] & ~bit] + cells[i + 1 :]


def _code(rows, cells: list[int]) -> tuple[int, ...]:
    perm = [0] * len(rows)
    for i, c in enumerate(cells):
        perm[(c & -c).bit_length() - 1] = i
    new = [0] * len(rows)
    for v, row in enumerate(rows):
        m = 0
        for u in bits_of(row):
            m |= 1 << perm[u]
        new[perm[v]] = m
    return tuple(new)


def _children(rows, cells):
    """Children with the least refinement trace, as ``(vertex, cells)`` pairs."""
    i = _target(cells)
    kids = []
    best = None
    for v in bits_of(cells[i]):
        refined, trace = _refine(rows, _individualise(cells, i, v))
        if best is None or trace < best:
            best, kids = trace, [(v, refined)]
        elif trace == best:
            kids.append((v, refined))
    return best, kids


def _perm_of(cells: list[int]) -> list[int]:
    perm = [0] * len(cells)
    for i, c in enumerate(cells):
        perm[(c & -c).bit_length() - 1] = i
    return perm


def _orbit(autos: list[list[int]], fixed: tuple[int, ...], v: int) -> set[int]:
    """Orbit of ``v`` under the automorphisms found so far that fix ``fixed`` pointwise."""
    gens = [a for a in autos if all(a[x] == x for x in fixed)]
    orbit = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for a in gens:
            y = a[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def _search(rows, start):
    """Least ``(traces, code)`` leaf, skipping children equivalent under known automorphisms."""
    best = [None, None]
    seen: dict[tuple, list[int]] = {}
    autos: list[list[int]] = []

    def leaf(path, cells):
        key = (path, _code(rows, cells))
        perm = _perm_of(cells)
        other = seen.get(key)
        if other is not None:
            inverse = [0] * len(perm)
            for v, i in enumerate(perm):
                inverse[i] = v
            autos.append([inverse[other[v]] for v in range(len(perm))])
        else:
            seen[key] = perm
        if best[0] is None or key < best[0]:
            best[0], best[1] = key, cells

    def rec(path, fixed, cells):
        if _target(cells) < 0:
            leaf(path, cells)
            return
        trace, kids = _children(rows, cells)
        done: set[int] = set()
        for v, child in kids:
            if v in done:
                continue
            rec(path + (trace,), fixed + (v,), child)
            done |= _orbit(autos, fixed, v)

    rec((), (), start)
    return best[1]


def canonical_labelling(g: Graph, colours: list[int] | None = None) -> list[int]:
    """``perm`` such that ``g.relabel(perm)`` is the canonical form of ``g``.

    ``colours`` optionally assigns each vertex an integer colour; only
    colour-preserving isomorphisms are then taken into account.
    """
    check_cap("canon", g.n)
    if g.n == 0:
        return []
    start, _ = _refine(g.rows, _initial_cells(g, colours))
    return _perm_of(_search(g.rows, start))


def _initial_cells(g: Graph, colours) -> list[int]:
    groups: dict[tuple, int] = {}
    for v in range(g.n):
        key = (colours[v] if colours is not None else 0, g.degree(v))
        groups[key] = groups.get(key, 0) | (1 << v)
    return [groups[key] for key in sorted(groups)]


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labelling(g)).with_label("")


def canonical_key(g: Graph, colours: list[int] | None = None) -> tuple:
    """Hashable isomorphism-class key (of the coloured graph, if ``colours`` is given)."""
    perm = canonical_labelling(g, colours)
    c = g.relabel(perm)
    if colours is None:
        return (c.n, c.rows)
    recoloured = [0] * g.n
    for v, col in enumerate(colours):
        recoloured[perm[v]] = col
    return (c.n, c.rows, tuple(recoloured))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)
