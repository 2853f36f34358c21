import json
from fractions import Fraction
from importlib import resources

import pytest

from starfree import sweep as W
from starfree.checks import BoundCheck
from starfree.families import cycle
from starfree.graph import parse_graph6


def _config(text, tmp_path):
    path = tmp_path / "c.toml"
    path.write_text(text)
    return W.load_config(path)


NECKLACE = """
name = "t"
[[family]]
name = "TriangleNecklace"
params = { k = [1, 2] }
checks = ["T4_7_8", "T3_3"]
equality = ["T4_9"]
"""


def test_family_sweep_reports(tmp_path):
    report = W.sweep_families(_config(NECKLACE, tmp_path))
    assert report.exit_code == W.EXIT_OK
    assert len(report.results) == 2 and len(report.checks) == 6
    assert report.counts()["T4_9"]["equality"] == 2
    rows = [json.loads(x) for x in report.to_jsonl().splitlines()]
    assert len(rows) == 6 and {r["family"] for r in rows} == {"TriangleNecklace"}
    assert "status: ok" in report.summary()


def test_grid_expansion_and_check_params():
    entry = W.parse_config({"family": [{"name": "Prop61", "params": {"r": [3, 4], "k": 1, "p": [1, 2], "t": 1, "mu": 0},
                                        "checks": ["T2_4:k=0"]}]}).families[0]
    assert len(entry.members()) == 4
    assert entry.checks[0].params == {"k": 0}
    assert str(entry.checks[0]) == "T2_4:k=0"


def test_table_csv():
    cfg = W.parse_config({"family": [{"name": "JoinCliques", "params": {"r": 3, "k": 3, "t": 1},
                                      "checks": ["T2_1", "T2_1:cls=outerplanar"]}]})
    csv = W.run_sweep(cfg).table_csv()
    lines = csv.strip().splitlines()
    assert lines[0] == "graph,n,m,r,class,k,lhs,rhs,equality"
    assert lines[1].endswith(",3,chromatic,3,6,6,1") and lines[2].endswith(",3,outerplanar,3,6,6,1")


def test_missing_equality_is_failure():
    cfg = W.parse_config({"family": [{"name": "Cycle", "params": {"n": 7}, "equality": ["P4_3"]}]})
    report = W.run_sweep(cfg)
    assert report.exit_code == W.EXIT_VIOLATED
    assert "counterexample graph6" in report.summary()


def test_hypothesis_exit():
    cfg = W.parse_config({"family": [{"name": "Cycle", "params": {"n": 6}, "checks": ["T4_9"]}]})
    report = W.run_sweep(cfg)
    assert report.exit_code == W.EXIT_HYPOTHESIS
    assert "hypothesis-failed" in report.to_jsonl()


def test_size_cap_exit():
    cfg = W.parse_config({"family": [{"name": "JoinCliques", "params": {"r": 3, "k": 3, "t": 1},
                                      "checks": ["T2_1"]}], "caps": {"alphaF": 4}})
    assert W.run_sweep(cfg).exit_code == W.EXIT_SIZE_CAP


def test_violation_emits_counterexample(monkeypatch):
    def broken(g, tid, params=None, ev=None):
        return BoundCheck(tid, Fraction(2), Fraction(1), False, False)

    monkeypatch.setattr(W, "check", broken)
    cfg = W.parse_config({"family": [{"name": "Cycle", "params": {"n": 5}, "checks": ["O3_1"],
                                      "verify_expected": False}]})
    report = W.run_sweep(cfg)
    assert report.exit_code == W.EXIT_VIOLATED
    assert "counterexample graph6: Dhc" in report.summary()
    assert parse_graph6("Dhc") == cycle(5)


@pytest.mark.parametrize("bad", [
    {"family": [{"name": "Nope", "params": {}}]},
    {"family": [{"name": "Cycle", "params": {"m": 3}}]},
    {"sample": [{"r": 3, "count": 2}]},
    {"sample": [{"r": 3, "count": 2, "max_n": 5, "strategies": ["x"]}]},
    {"caps": {"speed": 1}},
    {"family": [{"name": "Cycle", "params": {"n": 5}, "checks": [3]}]},
])
def test_config_errors(bad):
    with pytest.raises(W.ConfigError):
        W.parse_config(bad)


def test_bad_toml(tmp_path):
    with pytest.raises(W.ConfigError):
        _config("name = ", tmp_path)


def test_fuzz_is_reproducible_and_parallel_safe():
    a = W.fuzz(3, 12, 10, seed=7, heavy=False)
    b = W.fuzz(3, 12, 10, seed=7, heavy=False, workers=2)
    assert a.exit_code == W.EXIT_OK
    assert a.to_jsonl() == b.to_jsonl()


def test_equality_search():
    found = W.equality_search(3, "T4_9", budget=30)
    assert any(g.n == 4 for g in found)
    for g in found:
        from starfree.checks import check
        assert check(g, "T4_9").equality
    assert W.equality_search(3, "T4_9", budget=0) == []


@pytest.mark.parametrize("name", ["necklace", "g15_ring", "table1", "sharpness"])
def test_shipped_configs_parse(name):
    path = resources.files("starfree") / "data" / f"{name}.toml"
    cfg = W.load_config(path)
    assert cfg.families


def test_shipped_necklace_config_passes():
    path = resources.files("starfree") / "data" / "necklace.toml"
    assert W.sweep_families(path).exit_code == W.EXIT_OK
