"""Acceptance criteria 1-10, each printing a single PASS/FAIL line."""

import time
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest

from starfree import _kernels, brute
from starfree import solvers as S
from starfree.checks import check
from starfree.cubic import enumerate_cubic
from starfree.families import (
    c5_join_kk,
    cycle,
    g12,
    g15,
    g15_ring,
    g20,
    g30,
    g_cubic,
    h_cubic,
    join_cliques,
    prop61,
    triangle_necklace,
)
from starfree.graph import Graph
from starfree.predicates import is_claw_free
from starfree.ramsey import brute_ramsey_33, ramsey
from starfree.sweep import EXIT_OK, fuzz
from starfree.tdp import check_partition, is_Tcubic, td_partition

from .conftest import BACKENDS, seeded_graphs


@contextmanager
def criterion(capsys, number, title, limit=None):
    """Run a criterion body; print one verdict line whatever happens."""
    start = time.perf_counter()
    info = {}
    status = "FAIL"
    try:
        yield info
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        extra = f" ({info['detail']})" if "detail" in info else ""
        with capsys.disabled():
            print(f"\ncriterion {number:>2} {status}: {title} [{elapsed:.1f}s]{extra}")


def test_criterion_01_named_graphs(capsys):
    with criterion(capsys, 1, "named-graph invariants", limit=5):
        got = {name: (S.gamma(g).value, S.alpha(g).value) for name, g in
               (("G12", g12()), ("G20", g20()), ("G15", g15()))}
        assert got == {"G12": (3, 4), "G20": (5, 8), "G15": (3, 5)}, got


def test_criterion_02_family_ratios(capsys):
    with criterion(capsys, 2, "family sweeps reproduce sharp ratios") as info:
        cases = [(cycle(n), Fraction(3, 2), "P4_3") for n in (6, 12, 18)]
        cases += [(triangle_necklace(k), None, "T4_9") for k in range(1, 6)]
        cases += [(h_cubic(k), Fraction(4, 3), "P4_11") for k in (1, 2, 3)]
        cases += [(g15_ring(k), Fraction(5, 3), "P4_13") for k in (2, 3)] + [(g30(), Fraction(5, 3), "P4_13")]
        for g, ratio, tid in cases:
            a, gm = S.alpha(g).value, S.gamma(g).value
            if ratio is None:
                assert a == gm == g.n // 3, (g.label, a, gm)
            else:
                assert a == ratio * gm, (g.label, a, gm)
            assert check(g, tid).equality, (g.label, tid)
        for k in (2, 3):
            g = g_cubic(k)
            start = time.perf_counter()
            a, gm = S.alpha(g).value, S.gamma(g).value
            spent = time.perf_counter() - start
            assert spent < 60, f"{g.label}: {spent:.1f}s"
            assert (a, gm) == (8 * k, 5 * k) and a == Fraction(8, 5) * gm
            assert check(g, "P4_12").equality
        info["detail"] = f"{len(cases) + 2} graphs"


def test_criterion_03_chromatic_sharpness(capsys):
    with criterion(capsys, 3, "chromatic-family bound is sharp; Table 1 classes", limit=60):
        for r, k in [(3, 2), (3, 3), (4, 2), (4, 4)]:
            assert S.alphaF_chromatic(join_cliques(r, k, 1), k).value == (r - 1) * k
        for r in (3, 4):
            for k, fn in [(4, S.max_induced_planar), (3, S.max_induced_outerplanar), (2, S.max_induced_bipartite)]:
                g = join_cliques(r, k, 1)
                assert S.gamma(g).value == 1
                assert fn(g).value == k * (r - 1), (r, k)


def test_criterion_04_triangle_free_sharpness(capsys):
    with criterion(capsys, 4, "triangle-free family against gamma_k is sharp"):
        for k in (1, 2, 3):
            g = c5_join_kk(k)
            gk, af = S.gamma_k(g, k).value, S.alphaF_trianglefree(g).value
            assert gk == k and af == 5 == Fraction(5, k) * gk


def test_criterion_05_ramsey_sharpness(capsys):
    with criterion(capsys, 5, "Ramsey bound sharp at (3,3); brute r(3,3)", limit=10):
        g = c5_join_kk(1)
        assert S.gamma(g).value == 1
        assert S.alphaF_kqfree(g, 3).value == 5 == ramsey(3, 3) - 1
        assert brute_ramsey_33() == 6


def _alpha_k_grid():
    for r in (3, 4):
        for k in (0, 1, 2):
            if r < k + 1:
                continue
            for t in (1, 2):
                yield join_cliques(r, k + 1, t), r, k
                for p in (1, 2):
                    for mu in (0, 1):
                        g = prop61(r, k, p, t, mu)
                        if g.n <= 40:
                            yield g, r, k


def test_criterion_06_alpha_k_equality(capsys):
    with criterion(capsys, 6, "k-independence equality on join_cliques and prop61", limit=600) as info:
        count = 0
        for g, r, k in _alpha_k_grid():
            delta = g.min_degree
            bound = Fraction((r - 1) * (k + 1), delta - k + (r - 1) * (k + 1)) * g.n
            assert S.alpha_k(g, k).value == bound, (g.label, bound)
            count += 1
        info["detail"] = f"{count} graphs"


ORACLE_PAIRS = [
    ("alpha", S.alpha, brute.alpha),
    ("gamma", S.gamma, brute.gamma),
    ("gamma_2", lambda g: S.gamma_k(g, 2), lambda g: brute.gamma_k(g, 2)),
    ("gamma_3", lambda g: S.gamma_k(g, 3), lambda g: brute.gamma_k(g, 3)),
    ("alpha_1", lambda g: S.alpha_k(g, 1), lambda g: brute.alpha_k(g, 1)),
    ("alpha_2", lambda g: S.alpha_k(g, 2), lambda g: brute.alpha_k(g, 2)),
    ("alphaF_chromatic(2)", lambda g: S.alphaF_chromatic(g, 2), lambda g: brute.alphaF_chromatic(g, 2)),
    ("alphaF_kqfree(3)", lambda g: S.alphaF_kqfree(g, 3), lambda g: brute.alphaF_kqfree(g, 3)),
]


def test_criterion_07_oracle_equivalence(capsys):
    with criterion(capsys, 7, "solvers match exhaustive enumeration") as info:
        graphs = list(seeded_graphs(20240701, 1000, 14))
        expected = []
        for g in graphs:
            row = {name: (v, list(w)) for name, _, oracle in ORACLE_PAIRS for v, w in [oracle(g)]}
            row["chi"] = brute.chi(g)
            expected.append(row)
        bad = []
        previous = _kernels.active
        try:
            for backend in BACKENDS:
                _kernels.use_backend(backend)
                for g, want in zip(graphs, expected):
                    for name, solve, _ in ORACLE_PAIRS:
                        got = solve(g)
                        if (got.value, got.witness.tolist()) != want[name]:
                            bad.append((backend, name, g))
                    if S.chi(g).value != want["chi"]:
                        bad.append((backend, "chi", g))
        finally:
            _kernels.active = previous
        info["detail"] = f"{len(graphs)} graphs x {len(BACKENDS)} backends, {len(bad)} discrepancies"
        assert not bad, bad[:5]


@lru_cache(maxsize=None)
def claw_free_cubic():
    """Connected claw-free cubic graphs, n in 4..12, after cross-checking both enumerators."""
    counts = {}
    out = []
    for n in (4, 6, 8, 10, 12):
        a = enumerate_cubic(n, "saturate")
        b = enumerate_cubic(n, "insert")
        assert [g.rows for g in a] == [g.rows for g in b], n
        counts[n] = len(a)
        out += [g for g in a if is_claw_free(g)]
    return counts, out


def test_criterion_08_claw_free_cubic_layer(capsys):
    with criterion(capsys, 8, "exhaustive claw-free cubic layer", limit=600) as info:
        counts, graphs = claw_free_cubic()
        exceptions = 0
        for g in graphs:
            tc = is_Tcubic(g)
            a = check(g, "T4_7_8")
            b = check(g, "T4_9")
            exceptions += not (a.holds and a.equality == tc)
            exceptions += not (b.holds and b.equality == (tc or g.n == 4))
        info["detail"] = f"cubic counts {counts}, {len(graphs)} claw-free, {exceptions} exceptions"
        assert exceptions == 0


def _unit_key(p, perm=None):
    units = p.as_lists() if perm is None else [[perm.index(v) for v in u] for u in p.as_lists()]
    return sorted((kind, tuple(sorted(u))) for u, kind in zip(units, p.kinds))


def test_criterion_09_partition(capsys):
    with criterion(capsys, 9, "triangle-diamond partition is valid and relabelling-invariant") as info:
        _, graphs = claw_free_cubic()
        rng = np.random.default_rng(909)
        checked = 0
        for g in graphs:
            if g == Graph.complete(4).with_label(g.label):
                continue
            p = td_partition(g)
            check_partition(g, p)
            base = _unit_key(p)
            for _ in range(50):
                perm = [int(x) for x in rng.permutation(g.n)]
                q = td_partition(g.relabel(perm))
                check_partition(g.relabel(perm), q)
                assert _unit_key(q, perm) == base
            checked += 1
        info["detail"] = f"{checked} graphs x 50 permutations"
        assert checked == len(graphs) - 1


@pytest.mark.parametrize("r", [3, 4])
def test_criterion_10_fuzz(capsys, r):
    with criterion(capsys, 10, f"universal inequality fuzzing, r={r}") as info:
        report = fuzz(r, 500, 24, seed=2024)
        violations = [res for res in report.results if res.failures]
        info["detail"] = f"{len(report.results)} graphs, {len(report.checks)} checks, {len(violations)} violations"
        for res in violations:
            print(f"counterexample graph6: {res.graph6}")
        assert report.exit_code == EXIT_OK, report.summary()
