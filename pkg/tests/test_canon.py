import numpy as np

from starfree.canon import are_isomorphic, canonical_form, canonical_key, canonical_labelling
from starfree.families import cycle, g15, g20, triangle_necklace
from starfree.graph import Graph, complement

from .conftest import seeded_graphs


def _shuffle(g, rng):
    return g.relabel([int(x) for x in rng.permutation(g.n)])


def test_canonical_form_invariant_under_relabelling():
    rng = np.random.default_rng(5)
    for g in list(seeded_graphs(21, 80, 14)) + [g20(), g15(), triangle_necklace(4)]:
        c = canonical_form(g)
        for _ in range(5):
            assert canonical_form(_shuffle(g, rng)) == c


def test_labelling_is_a_permutation():
    for g in seeded_graphs(22, 20, 12):
        perm = canonical_labelling(g)
        assert sorted(perm) == list(range(g.n))


def test_non_isomorphic_pairs():
    assert not are_isomorphic(cycle(6), Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    assert are_isomorphic(complement(cycle(5)), cycle(5))
    # same degree sequence, different structure
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    k33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert not are_isomorphic(prism, k33)


def test_keys_separate_classes_like_networkx():
    import networkx as nx

    from starfree.predicates import to_networkx

    graphs = list(seeded_graphs(23, 60, 7))
    for i, g in enumerate(graphs):
        for h in graphs[i + 1:]:
            same = nx.is_isomorphic(to_networkx(g), to_networkx(h))
            assert (canonical_key(g) == canonical_key(h)) == same


def test_coloured_keys():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert canonical_key(path, [1, 0, 0]) == canonical_key(path, [0, 0, 1])
    assert canonical_key(path, [1, 0, 0]) != canonical_key(path, [0, 1, 0])
