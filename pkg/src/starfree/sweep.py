"""Family sweeps, random fuzzing and reports.

A sweep config is TOML::

    name = "necklaces"
    workers = 1

    [caps]
    alphaF = 30

    [[family]]
    name = "TriangleNecklace"
    params = { k = [1, 2, 3, 4, 5] }
    checks = ["T4_7_8", "T4_9"]
    equality = ["T4_7_8", "T4_9"]
    verify_expected = true

    [[sample]]
    r = 3
    count = 500
    max_n = 24
    seed = 2024
    strategies = ["rejection", "line_graph"]

Family parameters given as lists are expanded as a grid.  A check is
``"ID"`` or ``"ID:key=value,key=value"``; it receives the member's ``r``
and its family parameters, which explicit values override.  Theorems
listed under ``equality`` must be tight on every member.  Samples run
every applicable check unless ``checks`` is given.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import limits
from .canon import canonical_key
from .checks import BoundCheck, Evaluator, HypothesisFailed, applicable_checks, check, hypotheses_hold
from .cubic import enumerate_cubic
from .families import FAMILIES, FamilySpec
from .graph import Graph, emit_graph6
from .limits import SizeCapExceeded
from .predicates import is_connected
from .sampling import STRATEGIES, sample_k1r_free

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

EXIT_OK = 0
EXIT_VIOLATED = 2
EXIT_HYPOTHESIS = 3
EXIT_SIZE_CAP = 4


class ConfigError(ValueError):
    pass


# config ---------------------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckSpec:
    theorem_id: str
    params: dict = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> "CheckSpec":
        tid, _, rest = text.partition(":")
        params = {}
        for item in filter(None, (p.strip() for p in rest.split(","))):
            key, eq, value = item.partition("=")
            if not eq:
                raise ConfigError(f"bad check parameter {item!r} in {text!r}")
            params[key.strip()] = _scalar(value.strip())
        return cls(tid.strip(), params)

    def __str__(self) -> str:
        if not self.params:
            return self.theorem_id
        return self.theorem_id + ":" + ",".join(f"{k}={v}" for k, v in self.params.items())


def _scalar(text: str):
    try:
        return int(text)
    except ValueError:
        return text


@dataclass(frozen=True)
class FamilyEntry:
    name: str
    grid: dict
    checks: tuple[CheckSpec, ...] = ()
    equality: tuple[CheckSpec, ...] = ()
    verify_expected: bool = True
    max_n: int | None = None

    def members(self) -> list[FamilySpec]:
        names = FAMILIES[self.name].params
        axes = [self.grid[p] if isinstance(self.grid[p], list) else [self.grid[p]] for p in names]
        return [FamilySpec(self.name, dict(zip(names, combo))) for combo in itertools.product(*axes)]


@dataclass(frozen=True)
class SampleEntry:
    r: int
    count: int
    max_n: int
    seed: int = 0
    strategies: tuple[str, ...] = ("rejection",)
    checks: tuple[CheckSpec, ...] = ()
    heavy: bool = True


@dataclass(frozen=True)
class SweepConfig:
    name: str = "sweep"
    families: tuple[FamilyEntry, ...] = ()
    samples: tuple[SampleEntry, ...] = ()
    caps: dict = field(default_factory=dict)
    workers: int = 1


def _checks(raw, where: str) -> tuple[CheckSpec, ...]:
    if raw is None:
        return ()
    if isinstance(raw, str):
        raw = [raw]
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise ConfigError(f"{where}: checks must be a list of strings")
    return tuple(CheckSpec.parse(x) for x in raw)


def parse_config(data: dict) -> SweepConfig:
    families = []
    for i, raw in enumerate(data.get("family", [])):
        where = f"family[{i}]"
        name = raw.get("name")
        if name not in FAMILIES:
            raise ConfigError(f"{where}: unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
        grid = dict(raw.get("params", {}))
        wanted = FAMILIES[name].params
        if set(grid) != set(wanted):
            raise ConfigError(f"{where}: {name} takes parameters {list(wanted)}, got {sorted(grid)}")
        families.append(
            FamilyEntry(
                name=name,
                grid=grid,
                checks=_checks(raw.get("checks"), where),
                equality=_checks(raw.get("equality"), where),
                verify_expected=bool(raw.get("verify_expected", True)),
                max_n=raw.get("max_n"),
            )
        )
    samples = []
    for i, raw in enumerate(data.get("sample", [])):
        where = f"sample[{i}]"
        try:
            strategies = tuple(raw.get("strategies", ["rejection"]))
            entry = SampleEntry(
                r=int(raw["r"]),
                count=int(raw["count"]),
                max_n=int(raw["max_n"]),
                seed=int(raw.get("seed", 0)),
                strategies=strategies,
                checks=_checks(raw.get("checks"), where),
                heavy=bool(raw.get("heavy", True)),
            )
        except KeyError as exc:
            raise ConfigError(f"{where}: missing key {exc.args[0]!r}") from None
        bad = [s for s in strategies if s not in STRATEGIES]
        if bad:
            raise ConfigError(f"{where}: unknown strategies {bad}")
        samples.append(entry)
    caps = dict(data.get("caps", {}))
    unknown = sorted(set(caps) - set(limits.DEFAULT_CAPS))
    if unknown:
        raise ConfigError(f"unknown caps {unknown}; expected some of {sorted(limits.DEFAULT_CAPS)}")
    return SweepConfig(
        name=str(data.get("name", "sweep")),
        families=tuple(families),
        samples=tuple(samples),
        caps=caps,
        workers=int(data.get("workers", 1)),
    )


def load_config(path: str | Path) -> SweepConfig:
    with open(path, "rb") as fh:
        try:
            data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from None
    return parse_config(data)


# per-graph work -------------------------------------------------------------------------------


@dataclass
class GraphResult:
    """Everything a sweep learned about one graph."""

    key: tuple
    label: str
    n: int
    m: int
    graph6: str
    meta: dict
    checks: list[BoundCheck] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK
    seconds: float = 0.0

    def to_dicts(self) -> list[dict]:
        base = {"graph": self.label, "n": self.n, "m": self.m, "graph6": self.graph6, **self.meta}
        rows = [{**base, **c.to_dict()} for c in self.checks]
        for e in self.errors:
            rows.append({**base, "error": e})
        for f in self.failures:
            rows.append({**base, "failure": f})
        return rows


def _expected_value(ev: Evaluator, key) -> int | None:
    g = ev.g
    if key == "n":
        return g.n
    if key == "m":
        return g.m
    if key == "regularity":
        return ev.regularity
    if key == "min_degree":
        return g.min_degree
    if isinstance(key, tuple):
        kind, p = key
        return ev.value(kind, **({"q": p} if kind == "alphaF_kqfree" else {"k": p}))
    return ev.value(key)


def _run(result: GraphResult, g: Graph, jobs: list[tuple[CheckSpec, dict, bool]], ev: Evaluator) -> None:
    for spec, params, tight in jobs:
        try:
            c = check(g, spec.theorem_id, params, ev)
        except HypothesisFailed as exc:
            result.errors.append(f"hypothesis-failed: {exc}")
            result.exit_code = max(result.exit_code, EXIT_HYPOTHESIS)
            continue
        result.checks.append(c)
        if not c.holds:
            result.failures.append(f"{spec} violated: {c.lhs} > {c.rhs}")
        elif tight and not c.equality:
            result.failures.append(f"{spec} expected equality: {c.lhs} < {c.rhs}")
        elif c.characterization is False:
            result.failures.append(f"{spec} equality {c.equality} but expected {c.expected_equality}")


def _guard(result: GraphResult, fn) -> GraphResult:
    start = time.perf_counter()
    try:
        fn()
    except SizeCapExceeded as exc:
        result.errors.append(f"size-cap: {exc}")
        result.exit_code = EXIT_SIZE_CAP
    if result.failures:
        result.exit_code = EXIT_VIOLATED
    result.seconds = time.perf_counter() - start
    return result


def _family_member(key: tuple, entry: FamilyEntry, spec: FamilySpec, caps: dict) -> GraphResult:
    with limits.caps_override(**caps):
        g = spec.build()
        meta = {"family": spec.name, "params": dict(spec.params)}
        result = GraphResult(key, str(spec), g.n, g.m, emit_graph6(g), meta)
        if entry.max_n is not None and g.n > entry.max_n:
            result.meta["skipped"] = f"n = {g.n} > max_n = {entry.max_n}"
            return result
        ev = Evaluator(g)

        def work():
            base = {"r": spec.r, **spec.params}
            tight = {str(c) for c in entry.equality}
            specs = list(entry.checks) + [c for c in entry.equality if str(c) not in {str(x) for x in entry.checks}]
            _run(result, g, [(c, {**base, **c.params}, str(c) in tight) for c in specs], ev)
            if entry.verify_expected:
                for k, want in spec.expected().items():
                    got = _expected_value(ev, k)
                    if got != want:
                        name = k if isinstance(k, str) else f"{k[0]}({k[1]})"
                        result.failures.append(f"{name} = {got}, expected {want}")

        return _guard(result, work)


def _sample_member(key: tuple, entry: SampleEntry, index: int, caps: dict) -> GraphResult:
    with limits.caps_override(**caps):
        strategy = entry.strategies[index % len(entry.strategies)]
        if strategy == "line_graph" and entry.r != 3:
            strategy = "rejection"
        g = sample_k1r_free(entry.r, entry.max_n, entry.seed, strategy, index)
        meta = {"r": entry.r, "seed": entry.seed, "index": index, "strategy": strategy}
        result = GraphResult(key, g.label, g.n, g.m, emit_graph6(g), meta)
        ev = Evaluator(g)

        def work():
            if entry.checks:
                jobs = [(c, {"r": entry.r, **c.params}, False) for c in entry.checks]
                jobs = [j for j in jobs if hypotheses_hold(g, j[0].theorem_id, j[1], ev)]
            else:
                jobs = [(CheckSpec(t, p), p, False) for t, p in applicable_checks(g, entry.r, ev, entry.heavy)]
            _run(result, g, jobs, ev)

        return _guard(result, work)


# report ---------------------------------------------------------------------------------------


@dataclass
class SweepReport:
    name: str
    results: list[GraphResult]
    seconds: float = 0.0

    @property
    def checks(self) -> list[BoundCheck]:
        return [c for r in self.results for c in r.checks]

    @property
    def failed(self) -> list[GraphResult]:
        return [r for r in self.results if r.exit_code != EXIT_OK]

    @property
    def exit_code(self) -> int:
        codes = {r.exit_code for r in self.results}
        for code in (EXIT_VIOLATED, EXIT_HYPOTHESIS, EXIT_SIZE_CAP):
            if code in codes:
                return code
        return EXIT_OK

    def counts(self) -> dict[str, Counter]:
        out: dict[str, Counter] = {}
        for c in self.checks:
            row = out.setdefault(c.theorem_id, Counter())
            row["checks"] += 1
            row["holds"] += c.holds
            row["equality"] += c.equality
        return out

    def to_jsonl(self) -> str:
        lines = [json.dumps(row, sort_keys=True) for r in self.results for row in r.to_dicts()]
        return "\n".join(lines) + ("\n" if lines else "")

    def write_jsonl(self, path: str | Path) -> None:
        Path(path).write_text(self.to_jsonl())

    def summary(self) -> str:
        times = sorted(r.seconds for r in self.results)
        lines = [
            f"sweep {self.name}: {len(self.results)} graphs, {len(self.checks)} checks, "
            f"{self.seconds:.2f}s wall",
        ]
        if times:
            lines.append(f"per graph: median {times[len(times) // 2]:.3f}s, max {times[-1]:.3f}s")
        lines.append(f"{'theorem':<20}{'checks':>8}{'holds':>8}{'tight':>8}")
        for tid, row in sorted(self.counts().items()):
            lines.append(f"{tid:<20}{row['checks']:>8}{row['holds']:>8}{row['equality']:>8}")
        for r in self.failed:
            for f in r.failures:
                lines.append(f"FAIL {r.label}: {f}")
            for e in r.errors:
                lines.append(f"ERROR {r.label}: {e}")
            tag = "counterexample graph6" if r.failures else "graph6"
            lines.append(f"  {tag}: {r.graph6}")
        lines.append("status: ok" if self.exit_code == EXIT_OK else f"status: exit {self.exit_code}")
        return "\n".join(lines)

    def table_csv(self, theorem_id: str = "T2_1") -> str:
        """One row per check of ``theorem_id``: the bound table by graph and class."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph", "n", "m", "r", "class", "k", "lhs", "rhs", "equality"])
        for r in self.results:
            for c in r.checks:
                if c.theorem_id != theorem_id:
                    continue
                p = c.params
                w.writerow([r.label, r.n, r.m, p.get("r", ""), p.get("cls", "chromatic"), p.get("k", ""),
                            c.lhs, c.rhs, int(c.equality)])
        return buf.getvalue()


def _jobs(config: SweepConfig) -> list[tuple]:
    jobs = []
    for i, entry in enumerate(config.families):
        for spec in entry.members():
            jobs.append((_family_member, (0, i, spec.key()), entry, spec))
    for i, entry in enumerate(config.samples):
        for index in range(entry.count):
            jobs.append((_sample_member, (1, i, index), entry, index))
    return jobs


def _call(job, caps):
    fn, key, entry, item = job
    return fn(key, entry, item, caps)


def run_sweep(config: SweepConfig, workers: int | None = None) -> SweepReport:
    """Run every family member and sample; results come back in config order."""
    start = time.perf_counter()
    jobs = _jobs(config)
    workers = config.workers if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_call, jobs, itertools.repeat(config.caps), chunksize=4))
    else:
        results = [_call(job, config.caps) for job in jobs]
    results.sort(key=lambda r: r.key)
    return SweepReport(config.name, results, time.perf_counter() - start)


def sweep_families(config: SweepConfig | str | Path, workers: int | None = None) -> SweepReport:
    if not isinstance(config, SweepConfig):
        config = load_config(config)
    return run_sweep(config, workers)


def fuzz(r: int, count: int, max_n: int, seed: int = 0, strategies: tuple[str, ...] | None = None,
         workers: int = 1, heavy: bool = True) -> SweepReport:
    """Every applicable check on ``count`` sampled K_{1,r}-free graphs."""
    if strategies is None:
        strategies = ("rejection", "line_graph") if r == 3 else ("rejection",)
    entry = SampleEntry(r, count, max_n, seed, tuple(strategies), heavy=heavy)
    return run_sweep(SweepConfig(name=f"fuzz-r{r}", samples=(entry,)), workers)


# equality search ------------------------------------------------------------------------------


def _candidates(r: int, seed: int, max_n: int):
    for n in range(4, min(max_n, 12) + 1, 2):
        yield from enumerate_cubic(n)
    index = 0
    while True:
        g = sample_k1r_free(r, max_n, seed, "line_graph" if r == 3 and index % 2 else "rejection", index)
        index += 1
        if g.n > 1 and is_connected(g):
            yield g


def equality_search(r: int, theorem_id: str, budget: int, params: dict | None = None,
                    seed: int = 0, max_n: int = 10) -> list[Graph]:
    """Graphs attaining equality in ``theorem_id``, up to isomorphism.

    Connected cubic graphs on at most ``min(max_n, 12)`` vertices are tried
    first, then connected sampled K_{1,r}-free graphs; ``budget`` caps the
    number of graphs examined.  No completeness is claimed.
    """
    params = {"r": r, **(params or {})}
    found: list[Graph] = []
    seen = set()
    for g in itertools.islice(_candidates(r, seed, max_n), budget):
        ev = Evaluator(g)
        if not ev.k1r_free(r) or not hypotheses_hold(g, theorem_id, params, ev):
            continue
        if check(g, theorem_id, params, ev).equality:
            key = canonical_key(g)
            if key not in seen:
                seen.add(key)
                found.append(g)
    return found
