import pytest

from starfree import families as F
from starfree import solvers as S
from starfree.families import FAMILIES, FamilySpec
from starfree.graph import emit_graph6
from starfree.predicates import is_claw_free, is_connected, is_diamond_free, is_k1r_free, is_planar, regularity


SMALL_SPECS = [
    FamilySpec("JoinCliques", {"r": 3, "k": 2, "t": 1}),
    FamilySpec("JoinCliques", {"r": 4, "k": 4, "t": 1}),
    FamilySpec("Wheel", {"m": 6}),
    FamilySpec("Cycle", {"n": 7}),
    FamilySpec("TriangleNecklace", {"k": 3}),
    FamilySpec("G12", {}),
    FamilySpec("G12Chain", {"k": 2}),
    FamilySpec("G20", {}),
    FamilySpec("G15", {}),
    FamilySpec("C5JoinKk", {"k": 2}),
    FamilySpec("AlphaKSharp", {"r": 3, "k": 2, "t": 2}),
    FamilySpec("Prop61", {"r": 3, "k": 2, "p": 3, "t": 1, "mu": 0}),
    FamilySpec("Prop61", {"r": 4, "k": 1, "p": 2, "t": 2, "mu": 1}),
]


def _measure(g, key):
    if key == "n":
        return g.n
    if key == "regularity":
        return regularity(g)
    if key == "min_degree":
        return g.min_degree
    if isinstance(key, tuple):
        kind, p = key
        return S.invariant(g, kind, **({"q": p} if kind == "alphaF_kqfree" else {"k": p})).value
    return S.invariant(g, key).value


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=lambda s: f"{s.name}{s.key()[1]}")
def test_declared_invariants(spec):
    g = spec.build()
    assert is_k1r_free(g, spec.r)
    for key, want in spec.expected().items():
        assert _measure(g, key) == want, key


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=lambda s: f"{s.name}{s.key()[1]}")
def test_deterministic(spec):
    assert emit_graph6(spec.build()) == emit_graph6(spec.build())


def test_cubic_chains_are_claw_free_and_connected():
    for g in (F.h_cubic(1), F.h_cubic(2), F.g_cubic(2), F.triangle_necklace(1)):
        assert regularity(g) == 3 and is_claw_free(g) and is_connected(g)
    assert is_diamond_free(F.h_cubic(2)) and F.h_cubic(2).n == 24
    assert not is_diamond_free(F.g_cubic(2))


def test_quartic_constructions():
    ring = F.g15_ring(2)
    assert ring.n == 30 and regularity(ring) == 4 and is_claw_free(ring) and is_connected(ring)
    assert not is_planar(ring)
    g = F.g30()
    assert g.n == 30 and regularity(g) == 4 and is_planar(g) and is_claw_free(g)


def test_small_named_values():
    assert S.gamma(F.g20()).value == 5 and S.alpha(F.g20()).value == 8
    assert S.gamma(F.triangle_necklace(3)).value == 6
    assert S.alpha(F.triangle_necklace(3)).value == 6
    assert S.alpha(F.cycle(7)).value == 3 and S.gamma(F.cycle(7)).value == 3
    assert F.wheel(3).m == 6
    assert S.alphaF_chromatic(F.wheel(4), 2).value == 4
    assert S.alpha_k(F.join_cliques(3, 3, 2), 2).value == 6


def test_join_cliques_shape():
    g = F.join_cliques(4, 4, 1)
    assert g.n == 13 and g.degree(12) == 12
    assert S.alphaF_chromatic(g, 4).value == 12


def test_parameter_errors():
    for bad in (lambda: F.cycle(2), lambda: F.wheel(2), lambda: F.join_cliques(2, 1, 1),
                lambda: F.c5_join_kk(4), lambda: F.g15_ring(1), lambda: F.prop61(3, 3, 1, 1, 0),
                lambda: F.prop61(3, 0, 1, 1, 2)):
        with pytest.raises(ValueError):
            bad()
    with pytest.raises(ValueError):
        FamilySpec("Petersen", {})
    with pytest.raises(ValueError):
        FamilySpec("Cycle", {"k": 3})


def test_every_family_has_a_spec():
    assert {s.name for s in SMALL_SPECS} | {"G20Chain", "G15Ring", "G30"} == set(FAMILIES)
