from itertools import combinations

import pytest

from starfree.cubic import enumerate_cubic
from starfree.graph import Graph
from starfree.predicates import is_claw_free


@pytest.mark.parametrize("n, count", [(4, 1), (6, 2), (8, 5), (10, 19)])
def test_counts_agree(n, count):
    a = enumerate_cubic(n, "saturate")
    b = enumerate_cubic(n, "insert")
    assert len(a) == len(b) == count
    assert [g.rows for g in a] == [g.rows for g in b]


def test_k4_only_at_four():
    assert enumerate_cubic(4)[0] == Graph.complete(4).with_label("cubic4_0")


def _has_claw(g):
    return any(
        not (g.adjacent(a, b) or g.adjacent(a, c) or g.adjacent(b, c))
        for v in range(g.n)
        for a, b, c in combinations(g.neighbors(v), 3)
    )


def test_claw_free_filter():
    # every claw-free cubic unit structure on n <= 10 is forced: K4, prism, two diamonds, diamond + two triangles
    counts = []
    for n in (4, 6, 8, 10):
        graphs = enumerate_cubic(n)
        assert [is_claw_free(g) for g in graphs] == [not _has_claw(g) for g in graphs]
        counts.append(sum(map(is_claw_free, graphs)))
    assert counts == [1, 1, 1, 1]


@pytest.mark.parametrize("n", [3, 2, 16, 7])
def test_order_range(n):
    with pytest.raises(ValueError):
        enumerate_cubic(n)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        enumerate_cubic(6, "orderly")
