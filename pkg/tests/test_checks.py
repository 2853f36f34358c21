from fractions import Fraction

import pytest

from starfree import solvers as S
from starfree.checks import THEOREM_IDS, Evaluator, HypothesisFailed, applicable_checks, check, hypotheses_hold
from starfree.families import c5_join_kk, cycle, g15, h_cubic, join_cliques, triangle_necklace, wheel
from starfree.graph import Graph, disjoint_union
from starfree.sampling import sample_k1r_free


def test_quartic_example():
    c = check(g15(), "T4_2", {"d": 4})
    assert (c.lhs, c.rhs, c.equality) == (5, 5, True)
    assert isinstance(c.rhs, Fraction)


def test_cycle_equality():
    assert check(cycle(6), "P4_3").equality
    c7 = check(cycle(7), "P4_3")
    assert c7.holds and not c7.equality and c7.characterization is True
    two = disjoint_union(cycle(6), cycle(12))
    assert check(two, "P4_3").equality


def test_k4_and_necklace_equality():
    k4 = check(Graph.complete(4), "T4_9")
    assert (k4.lhs, k4.rhs, k4.equality, k4.characterization) == (1, 1, True, True)
    f = check(triangle_necklace(2), "T4_7_8")
    assert f.equality and f.characterization


def test_diamond_free_cubic_example():
    c = check(h_cubic(2), "T4_10")
    assert (c.lhs, c.rhs, c.equality) == (8, 8, True)


def test_chromatic_bound_tight_on_join():
    for r, k in [(3, 2), (4, 3)]:
        c = check(join_cliques(r, k, 1), "T2_1", {"r": r, "k": k})
        assert c.lhs == (r - 1) * k and c.equality


def test_class_fills_k():
    c = check(wheel(4), "T2_1", {"r": 3, "cls": "bipartite"})
    assert c.params["k"] == 2 and c.lhs == 4 and c.equality


def test_triangle_free_bound():
    for k in (1, 2, 3):
        c = check(c5_join_kk(k), "T5_1", {"k": k})
        assert c.lhs == 5 and c.rhs == 5
    r5 = check(c5_join_kk(3), "R5_remark", {"k": 4})
    assert "unconfirmed-sharpness" in r5.notes and r5.expected_equality is None


def test_ramsey_bound_notes():
    c = check(c5_join_kk(1), "T2_2", {"r": 3, "q": 3})
    assert c.lhs == 5 and c.rhs == 5
    c4 = check(c5_join_kk(1), "T2_2", {"r": 3, "q": 4})
    assert c4.holds and "r(K_3,K_4) = 9 is witness_verified" in c4.notes
    gap = check(c5_join_kk(1), "T2_3_kq_reduction", {"r": 3, "q": 3})
    assert (gap.lhs, gap.rhs) == (5, 6) and "off-by-one-gap" in gap.notes


def test_hypothesis_failures_name_predicate():
    claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(HypothesisFailed) as err:
        check(claw, "T2_1", {"r": 3, "k": 1})
    assert "K_{1,3}" in err.value.predicate
    with pytest.raises(HypothesisFailed):
        check(cycle(5), "T4_9")
    with pytest.raises(HypothesisFailed):
        check(cycle(5), "T2_2", {"r": 5, "q": 5})
    assert not hypotheses_hold(Graph.complete(5), "O3_2")


def test_parameter_errors():
    with pytest.raises(ValueError):
        check(cycle(6), "T9_9")
    with pytest.raises(ValueError):
        check(cycle(6), "T2_4", {"r": 3})


def test_exact_rationals():
    c = check(cycle(7), "O3_1")
    assert c.lhs == Fraction(7, 3) and c.rhs == 3
    d = c.to_dict()
    assert d["lhs"] == "7/3" and d["theorem_id"] == "O3_1"


def test_evaluator_caches():
    ev = Evaluator(cycle(9))
    assert ev.inv("alpha") is ev.inv("alpha")
    check(cycle(9), "C4_1", ev=ev)
    assert ("inv", "gamma", ()) in ev._cache


def test_applicable_checks_on_samples():
    ids = set()
    for i in range(30):
        g = sample_k1r_free(3, 12, seed=5, strategy="line_graph", index=i)
        for tid, params in applicable_checks(g, 3):
            c = check(g, tid, params)
            assert c.holds and c.characterization is not False
            ids.add(tid)
    assert {"T2_1", "T2_4", "T3_3", "T5_1"} <= ids
    assert ids <= set(THEOREM_IDS)


def test_witnesses_in_checks():
    c = check(g15(), "T4_2")
    assert c.witnesses["alpha"] == S.alpha(g15()).witness.tolist()
