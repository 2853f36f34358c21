"""Bound checks: each inequality evaluated exactly on a concrete graph.

Every check verifies its hypotheses first and raises
:class:`HypothesisFailed` naming the failed predicate.  Sides are
``Fraction`` values and every check is oriented as ``lhs <= rhs``.
Results characterising their equality cases also report whether the
observed equality matches the characterisation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import predicates as P
from . import solvers as S
from .canon import are_isomorphic
from .families import g15, g15_ring, g30, g_cubic, h_cubic
from .graph import Graph, bits_of, emit_graph6
from .ramsey import Provenance, RamseyLookupError, entry
from .tdp import is_Tcubic

THEOREM_IDS = (
    "T2_1",
    "T2_2",
    "T2_3_kq_reduction",
    "T2_4",
    "O3_1",
    "O3_2",
    "T3_3",
    "C4_1",
    "T4_2",
    "P4_3",
    "O4_5",
    "T4_6",
    "T4_7_8",
    "T4_9",
    "T4_10",
    "P4_11",
    "P4_12",
    "P4_13",
    "T5_1",
    "R5_remark",
)


class HypothesisFailed(ValueError):
    def __init__(self, theorem_id: str, predicate: str):
        super().__init__(f"{theorem_id}: hypothesis failed: {predicate}")
        self.theorem_id = theorem_id
        self.predicate = predicate


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality ``lhs <= rhs``.

    ``expected_equality`` is set when the result characterises its equality
    case (or a construction claims equality); ``characterization`` then
    records whether the observed ``equality`` agrees with it.
    """

    theorem_id: str
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    params: dict = field(default_factory=dict)
    expression: str = ""
    witnesses: dict = field(default_factory=dict)
    expected_equality: bool | None = None
    characterization: bool | None = None
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.holds and self.characterization is not False

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "params": dict(self.params),
            "expression": self.expression,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "expected_equality": self.expected_equality,
            "characterization": self.characterization,
            "witnesses": self.witnesses,
            "notes": list(self.notes),
        }


class Evaluator:
    """Caches invariants and predicates of one graph across many checks."""

    def __init__(self, g: Graph):
        self.g = g
        self._cache: dict = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def inv(self, kind: str, **params) -> S.InvariantValue:
        key = ("inv", kind, tuple(sorted(params.items())))
        return self._memo(key, lambda: S.invariant(self.g, kind, **params))

    def value(self, kind: str, **params) -> int:
        return self.inv(kind, **params).value

    def k1r_free(self, r: int) -> bool:
        return self._memo(("k1r", r), lambda: P.is_k1r_free(self.g, r))

    @property
    def claw_free(self) -> bool:
        return self.k1r_free(3)

    def pred(self, name: str) -> bool:
        fns: dict[str, Callable[[Graph], bool]] = {
            "connected": P.is_connected,
            "diamond_free": P.is_diamond_free,
            "complete": P.is_complete,
            "Tcubic": is_Tcubic,
            "all_in_triangles": _all_in_triangles,
        }
        return self._memo(("pred", name), lambda: fns[name](self.g))

    @property
    def regularity(self) -> int | None:
        return self._memo("reg", lambda: P.regularity(self.g))


def _all_in_triangles(g: Graph) -> bool:
    for v in range(g.n):
        nb = g.rows[v]
        if not any(g.rows[u] & nb for u in bits_of(nb)):
            return False
    return True


# theorem table --------------------------------------------------------------------------


@dataclass(frozen=True)
class _Theorem:
    params: tuple[str, ...]
    hypotheses: Callable
    evaluate: Callable
    defaults: dict = field(default_factory=dict)


def _require(cond: bool, tid: str, predicate: str) -> None:
    if not cond:
        raise HypothesisFailed(tid, predicate)


def _nonempty(ev, tid):
    _require(ev.g.n >= 1, tid, "n >= 1")


def _k1r(ev, tid, r):
    _require(r >= 3, tid, "r >= 3")
    _require(ev.k1r_free(r), tid, f"K_{{1,{r}}}-free")


def _claw_free(ev, tid):
    _require(ev.claw_free, tid, "claw-free")


def _cubic_connected_clawfree(ev, tid):
    _nonempty(ev, tid)
    _require(ev.regularity == 3, tid, "cubic")
    _require(ev.pred("connected"), tid, "connected")
    _claw_free(ev, tid)


def _witness(ev, kind, **params):
    return ev.inv(kind, **params).witness.tolist()


_CLASS_K = {"bipartite": 2, "outerplanar": 3, "planar": 4}


def _t2_1_hyp(ev, r, k, cls="chromatic"):
    _k1r(ev, "T2_1", r)
    if cls == "chromatic":
        _require(k >= 1, "T2_1", "k >= 1")
    else:
        _require(cls in _CLASS_K, "T2_1", "class in {chromatic, bipartite, outerplanar, planar}")
        _require(k == _CLASS_K[cls], "T2_1", f"k = {_CLASS_K[cls]} for class {cls}")


def _t2_1(ev, r, k, cls="chromatic"):
    if cls == "chromatic":
        lhs_kind, lhs_params = "alphaF_chromatic", {"k": k}
    else:
        lhs_kind, lhs_params = cls, {}
    lhs = ev.value(lhs_kind, **lhs_params)
    gam = ev.value("gamma")
    return (
        lhs,
        Fraction((r - 1) * k * gam),
        f"{lhs_kind}{lhs_params or ''} <= (r-1)*k*gamma",
        {lhs_kind: _witness(ev, lhs_kind, **lhs_params), "gamma": _witness(ev, "gamma")},
    )


def _ramsey_entry(tid, r, q):
    try:
        return entry(r, q)
    except RamseyLookupError as exc:
        raise HypothesisFailed(tid, f"r(K_{r}, K_{q}) tabulated") from exc


def _ramsey_notes(e):
    if e.provenance is Provenance.VERIFIED_BOTH_SIDES:
        return ()
    return (f"r(K_{e.r},K_{e.q}) = {e.value} is {e.provenance.value}",)


def _t2_2_hyp(ev, r, q):
    _k1r(ev, "T2_2", r)
    _require(q >= 3, "T2_2", "q >= 3")
    _ramsey_entry("T2_2", r, q)


def _t2_2(ev, r, q):
    e = _ramsey_entry("T2_2", r, q)
    lhs = ev.value("alphaF_kqfree", q=q)
    gam = ev.value("gamma")
    return (
        lhs,
        Fraction((e.value - 1) * gam),
        "alphaF_kqfree <= (r(K_r,K_q) - 1)*gamma",
        {"alphaF_kqfree": _witness(ev, "alphaF_kqfree", q=q), "gamma": _witness(ev, "gamma")},
        _ramsey_notes(e),
    )


def _t2_3_hyp(ev, r, q):
    _k1r(ev, "T2_3_kq_reduction", r)
    _require(q >= 3, "T2_3_kq_reduction", "q >= 3")
    _ramsey_entry("T2_3_kq_reduction", r, q)


def _t2_3(ev, r, q):
    # for the K_q-free family the least excluded graph is K_q itself
    e = _ramsey_entry("T2_3_kq_reduction", r, q)
    lhs = ev.value("alphaF_kqfree", q=q)
    gam = ev.value("gamma")
    return (
        lhs,
        Fraction(e.value * gam),
        "alphaF_kqfree <= r(K_r,K_q)*gamma",
        {"alphaF_kqfree": _witness(ev, "alphaF_kqfree", q=q), "gamma": _witness(ev, "gamma")},
        # constructions only reach (r(K_r,K_q) - 1)*gamma, so tightness is not claimed
        _ramsey_notes(e) + ("off-by-one-gap",),
    )


def _t2_4_hyp(ev, r, k):
    _nonempty(ev, "T2_4")
    _k1r(ev, "T2_4", r)
    _require(k >= 0, "T2_4", "k >= 0")
    _require(ev.g.min_degree >= k + 1, "T2_4", "min degree >= k+1")


def _t2_4(ev, r, k):
    g = ev.g
    big = (r - 1) * (k + 1)
    lhs = ev.value("alpha_k", k=k)
    rhs = Fraction(big, g.min_degree - k + big) * g.n
    return lhs, rhs, "alpha_k <= (r-1)(k+1)/(delta-k+(r-1)(k+1)) * n", {"alpha_k": _witness(ev, "alpha_k", k=k)}


def _o3_1_hyp(ev):
    _nonempty(ev, "O3_1")


def _o3_1(ev):
    g = ev.g
    return Fraction(g.n, g.max_degree + 1), ev.value("gamma"), "n/(Delta+1) <= gamma", {"gamma": _witness(ev, "gamma")}


def _o3_2_hyp(ev):
    _require(ev.pred("connected"), "O3_2", "connected")
    _require(not ev.pred("complete"), "O3_2", "not complete")
    _require(ev.g.max_degree >= 3, "O3_2", "max degree >= 3")


def _o3_2(ev):
    g = ev.g
    return Fraction(g.n, g.max_degree), ev.value("alpha"), "n/Delta <= alpha", {"alpha": _witness(ev, "alpha")}


def _t3_3_hyp(ev):
    _nonempty(ev, "T3_3")
    _claw_free(ev, "T3_3")


def _t3_3(ev):
    g = ev.g
    return ev.value("alpha"), Fraction(2, g.min_degree + 2) * g.n, "alpha <= 2n/(delta+2)", {"alpha": _witness(ev, "alpha")}


def _c4_1_hyp(ev):
    _claw_free(ev, "C4_1")


def _alpha_gamma(ev, ratio: Fraction, text: str):
    return (
        ev.value("alpha"),
        ratio * ev.value("gamma"),
        text,
        {"alpha": _witness(ev, "alpha"), "gamma": _witness(ev, "gamma")},
    )


def _c4_1(ev):
    return _alpha_gamma(ev, Fraction(2), "alpha <= 2*gamma")


def _t4_2_hyp(ev, d=None):
    _nonempty(ev, "T4_2")
    _claw_free(ev, "T4_2")
    reg = ev.regularity
    _require(reg is not None and reg >= 2, "T4_2", "d-regular with d >= 2")
    _require(d is None or d == reg, "T4_2", f"{d}-regular")


def _t4_2(ev, d=None):
    d = ev.regularity
    return _alpha_gamma(ev, Fraction(2 * (d + 1), d + 2), f"alpha <= 2({d}+1)/({d}+2)*gamma")


def _p4_3_hyp(ev):
    _nonempty(ev, "P4_3")
    _require(ev.regularity == 2, "P4_3", "2-regular")


def _p4_3(ev):
    sizes = [c.bit_count() for c in P.components(ev.g)]
    expected = all(s % 6 == 0 for s in sizes)
    return _alpha_gamma(ev, Fraction(3, 2), "alpha <= 3/2*gamma") + ((), expected)


def _o4_5_hyp(ev):
    _cubic_connected_clawfree(ev, "O4_5")
    _require(ev.pred("diamond_free"), "O4_5", "diamond-free")
    _require(ev.g.n != 4, "O4_5", "not K4")


def _o4_5(ev):
    g = ev.g
    return ev.value("alpha"), Fraction(g.n, 3), "alpha <= n/3", {"alpha": _witness(ev, "alpha")}, (), True


def _t4_6_hyp(ev):
    _nonempty(ev, "T4_6")
    _require(ev.pred("all_in_triangles"), "T4_6", "every vertex in a triangle")


def _t4_6(ev):
    g = ev.g
    return ev.value("gamma"), Fraction(g.n, 3), "gamma <= n/3", {"gamma": _witness(ev, "gamma")}


def _t4_7_8_hyp(ev):
    _cubic_connected_clawfree(ev, "T4_7_8")


def _t4_7_8(ev):
    g = ev.g
    return (
        ev.value("gamma"),
        Fraction(g.n, 3),
        "gamma <= n/3",
        {"gamma": _witness(ev, "gamma")},
        (),
        ev.pred("Tcubic"),
    )


def _t4_9_hyp(ev):
    _cubic_connected_clawfree(ev, "T4_9")


def _t4_9(ev):
    return (
        ev.value("gamma"),
        Fraction(ev.value("alpha")),
        "gamma <= alpha",
        {"alpha": _witness(ev, "alpha"), "gamma": _witness(ev, "gamma")},
        (),
        ev.pred("Tcubic") or ev.pred("complete"),
    )


def _t4_10_hyp(ev):
    _nonempty(ev, "T4_10")
    _require(ev.regularity == 3, "T4_10", "cubic")
    _claw_free(ev, "T4_10")
    _require(ev.pred("diamond_free"), "T4_10", "diamond-free")


def _t4_10(ev):
    return _alpha_gamma(ev, Fraction(4, 3), "alpha <= 4/3*gamma")


def _member(g: Graph, builders) -> bool:
    return any(are_isomorphic(g, build()) for build in builders)


def _p4_11_hyp(ev):
    g = ev.g
    _cubic_connected_clawfree(ev, "P4_11")
    member = g.n % 12 == 0 and ev._memo("H", lambda: _member(g, [lambda: h_cubic(g.n // 12)]))
    _require(member, "P4_11", "member of the H_cubic chain family")


def _p4_11(ev):
    return _alpha_gamma(ev, Fraction(4, 3), "alpha <= 4/3*gamma") + ((), True)


def _p4_12_hyp(ev):
    _cubic_connected_clawfree(ev, "P4_12")


def _p4_12(ev):
    g = ev.g
    member = None
    if g.n % 20 == 0 and g.n >= 40:
        member = ev._memo("G", lambda: _member(g, [lambda: g_cubic(g.n // 20)])) or None
    return _alpha_gamma(ev, Fraction(8, 5), "alpha <= 8/5*gamma") + ((), member)


def _p4_13_hyp(ev):
    _nonempty(ev, "P4_13")
    _require(ev.regularity == 4, "P4_13", "4-regular")
    _require(ev.pred("connected"), "P4_13", "connected")
    _claw_free(ev, "P4_13")


def _p4_13(ev):
    g = ev.g
    builders = []
    if g.n == 15:
        builders.append(g15)
    if g.n == 30:
        builders.append(g30)
    if g.n % 15 == 0 and g.n >= 30:
        builders.append(lambda: g15_ring(g.n // 15))
    member = ev._memo("G15", lambda: _member(g, builders)) or None
    return _alpha_gamma(ev, Fraction(5, 3), "alpha <= 5/3*gamma") + ((), member)


def _t5_1_hyp(ev, k):
    _claw_free(ev, "T5_1")
    _require(1 <= k <= 3, "T5_1", "k in {1,2,3}")


def _t5_1(ev, k):
    lhs = ev.value("alphaF_trianglefree")
    return (
        lhs,
        Fraction(5, k) * ev.value("gamma_k", k=k),
        "alphaF_trianglefree <= 5/k*gamma_k",
        {"alphaF_trianglefree": _witness(ev, "alphaF_trianglefree"), "gamma_k": _witness(ev, "gamma_k", k=k)},
    )


def _r5_hyp(ev, k):
    _claw_free(ev, "R5_remark")
    _require(k >= 4, "R5_remark", "k >= 4")


def _r5(ev, k):
    lhs = ev.value("alphaF_trianglefree")
    return (
        lhs,
        Fraction(k + 2, k) * ev.value("gamma_k", k=k),
        "alphaF_trianglefree <= (k+2)/k*gamma_k",
        {"alphaF_trianglefree": _witness(ev, "alphaF_trianglefree"), "gamma_k": _witness(ev, "gamma_k", k=k)},
        ("unconfirmed-sharpness",),
    )


THEOREMS: dict[str, _Theorem] = {
    "T2_1": _Theorem(("r", "k", "cls"), _t2_1_hyp, _t2_1, {"cls": "chromatic"}),
    "T2_2": _Theorem(("r", "q"), _t2_2_hyp, _t2_2),
    "T2_3_kq_reduction": _Theorem(("r", "q"), _t2_3_hyp, _t2_3),
    "T2_4": _Theorem(("r", "k"), _t2_4_hyp, _t2_4),
    "O3_1": _Theorem((), _o3_1_hyp, _o3_1),
    "O3_2": _Theorem((), _o3_2_hyp, _o3_2),
    "T3_3": _Theorem((), _t3_3_hyp, _t3_3),
    "C4_1": _Theorem((), _c4_1_hyp, _c4_1),
    "T4_2": _Theorem(("d",), _t4_2_hyp, _t4_2, {"d": None}),
    "P4_3": _Theorem((), _p4_3_hyp, _p4_3),
    "O4_5": _Theorem((), _o4_5_hyp, _o4_5),
    "T4_6": _Theorem((), _t4_6_hyp, _t4_6),
    "T4_7_8": _Theorem((), _t4_7_8_hyp, _t4_7_8),
    "T4_9": _Theorem((), _t4_9_hyp, _t4_9),
    "T4_10": _Theorem((), _t4_10_hyp, _t4_10),
    "P4_11": _Theorem((), _p4_11_hyp, _p4_11),
    "P4_12": _Theorem((), _p4_12_hyp, _p4_12),
    "P4_13": _Theorem((), _p4_13_hyp, _p4_13),
    "T5_1": _Theorem(("k",), _t5_1_hyp, _t5_1),
    "R5_remark": _Theorem(("k",), _r5_hyp, _r5),
}


def _resolve(theorem_id: str, params: dict) -> tuple[_Theorem, dict]:
    if theorem_id not in THEOREMS:
        raise ValueError(f"unknown theorem id {theorem_id!r}; expected one of {', '.join(THEOREM_IDS)}")
    th = THEOREMS[theorem_id]
    args = dict(th.defaults)
    params = dict(params)
    if "class" in params:
        params["cls"] = params.pop("class")
    for name, value in params.items():
        if name not in th.params:
            continue
        args[name] = value
    if "cls" in args and "k" not in args and args["cls"] in _CLASS_K:
        args["k"] = _CLASS_K[args["cls"]]
    missing = [p for p in th.params if p not in args]
    if missing:
        raise ValueError(f"{theorem_id} needs parameters {missing}")
    return th, args


def hypotheses_hold(g: Graph, theorem_id: str, params: dict | None = None, ev: Evaluator | None = None) -> bool:
    th, args = _resolve(theorem_id, params or {})
    try:
        th.hypotheses(ev or Evaluator(g), **args)
    except HypothesisFailed:
        return False
    return True


def check(g: Graph, theorem_id: str, params: dict | None = None, ev: Evaluator | None = None) -> BoundCheck:
    """Evaluate one theorem on ``g``; only parameters the theorem uses are kept."""
    th, args = _resolve(theorem_id, params or {})
    ev = ev or Evaluator(g)
    th.hypotheses(ev, **args)
    out = th.evaluate(ev, **args)
    lhs, rhs, expr, witnesses = out[:4]
    notes = out[4] if len(out) > 4 else ()
    expected = out[5] if len(out) > 5 else None
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    equality = lhs == rhs
    shown = {k: v for k, v in args.items() if v is not None and not (k == "cls" and v == "chromatic")}
    return BoundCheck(
        theorem_id=theorem_id,
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        equality=equality,
        params=shown,
        expression=expr,
        witnesses=witnesses,
        expected_equality=expected,
        characterization=None if expected is None else expected == equality,
        notes=tuple(notes),
    )


def applicable_checks(g: Graph, r: int, ev: Evaluator | None = None, heavy: bool = True) -> list[tuple[str, dict]]:
    """Theorem instances whose hypotheses ``g`` satisfies, for a K_{1,r}-free ``g``.

    ``heavy`` adds the induced-subgraph maximisations that dominate run time.
    """
    ev = ev or Evaluator(g)
    cands: list[tuple[str, dict]] = []
    ks = (1, 2, 3) if heavy else (1,)
    cands += [("T2_1", {"r": r, "k": k}) for k in ks]
    if heavy:
        cands += [("T2_2", {"r": r, "q": q}) for q in (3, 4)]
        cands += [("T2_3_kq_reduction", {"r": r, "q": q}) for q in (3, 4)]
    cands += [("T2_4", {"r": r, "k": k}) for k in (0, 1, 2)]
    cands += [("O3_1", {}), ("O3_2", {}), ("T4_6", {})]
    if ev.claw_free:
        cands += [(tid, {}) for tid in ("T3_3", "C4_1", "T4_2", "P4_3", "O4_5", "T4_7_8", "T4_9", "T4_10")]
        cands += [(tid, {}) for tid in ("P4_11", "P4_12", "P4_13")]
        if heavy:
            cands += [("T5_1", {"k": k}) for k in (1, 2, 3)]
            cands += [("R5_remark", {"k": k}) for k in (4, 5)]
    return [(tid, p) for tid, p in cands if hypotheses_hold(g, tid, p, ev)]


def counterexample(g: Graph) -> str:
    return emit_graph6(g) if g.n else ""
