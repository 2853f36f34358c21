import numpy as np
import pytest

from starfree.families import g_cubic, h_cubic, triangle_necklace
from starfree.graph import Graph
from starfree.tdp import IsK4, NotClawFree, NotConnected, NotCubic, check_partition, is_Tcubic, td_partition


def test_necklace_is_all_triangles():
    for k in range(1, 5):
        p = td_partition(triangle_necklace(k))
        check_partition(triangle_necklace(k), p)
        assert len(p.triangles) == 2 * k and not p.diamonds


def test_h_chain_units():
    for k in (1, 2):
        g = h_cubic(k)
        p = td_partition(g)
        check_partition(g, p)
        assert len(p.triangles) == g.n // 3 and not p.diamonds


def test_g_chain_has_diamonds():
    g = g_cubic(2)
    p = td_partition(g)
    check_partition(g, p)
    assert len(p.diamonds) == 4
    assert sum(len(u) for u in p.units) == g.n


def test_partition_stable_under_relabelling():
    rng = np.random.default_rng(3)
    g = g_cubic(2)
    base = {frozenset(u) for u in td_partition(g).units}
    for _ in range(10):
        perm = [int(x) for x in rng.permutation(g.n)]
        h = g.relabel(perm)
        back = {frozenset(perm.index(v) for v in u) for u in td_partition(h).units}
        assert back == base


def test_precondition_errors():
    with pytest.raises(IsK4):
        td_partition(Graph.complete(4))
    with pytest.raises(NotCubic):
        td_partition(Graph.complete(5))
    k33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    with pytest.raises(NotClawFree):
        td_partition(k33)
    two = Graph.from_edges(12, [(a + s, b + s) for s in (0, 6)
                               for a, b in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]])
    with pytest.raises(NotConnected):
        td_partition(two)


def test_tcubic_membership():
    assert is_Tcubic(triangle_necklace(4))
    assert not is_Tcubic(Graph.complete(4))
    assert not is_Tcubic(h_cubic(1))
    assert not is_Tcubic(Graph.empty(6))
