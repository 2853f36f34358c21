import pytest

from starfree import ramsey as R
from starfree.families import cycle
from starfree.graph import Graph


def test_values():
    assert R.ramsey(3, 3) == 6
    assert R.ramsey(3, 4) == 9 and R.ramsey(4, 3) == 9
    assert R.ramsey(2, 7) == 7 and R.ramsey(5, 2) == 5
    assert R.ramsey(4, 4) == 18


def test_out_of_table():
    with pytest.raises(R.RamseyLookupError):
        R.ramsey(5, 5)
    with pytest.raises(R.RamseyLookupError):
        R.ramsey(3, 6)


def test_symmetry_and_growth():
    pairs = R.table_pairs()
    for r, q in pairs:
        assert R.ramsey(r, q) == R.ramsey(q, r)
        if (r, q - 1) in pairs:
            assert R.ramsey(r, q) >= R.ramsey(r, q - 1) + 1


def test_witnesses():
    assert R.verify_witness(3, 3, cycle(5))
    assert not R.verify_witness(3, 3, cycle(4))
    for r, q in R.table_pairs():
        e = R.entry(r, q)
        if e.witness is not None:
            assert R.verify_witness(r, q), (r, q)
        else:
            assert e.provenance is R.Provenance.TRUSTED_CONSTANT
    assert R.entry(4, 5).witness is None


def test_swapped_witness_is_complement():
    w34, w43 = R.entry(3, 4).witness, R.entry(4, 3).witness
    assert w34.n == w43.n == 8
    assert w34.m + w43.m == 28


def test_brute_ramsey_33():
    assert R._two_colourings_avoid_triangles(5) > 0
    assert R.brute_ramsey_33() == 6 == R.ramsey(3, 3)
    assert not R.witness_ok(3, 3, Graph.complete(5))
