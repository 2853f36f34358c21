"""Time the compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py --graphs 10 --n 30
"""

import argparse
import statistics
import time

import numpy as np

from starfree import _kernels
from starfree.graph import Graph
from starfree.predicates import complement_rows


def random_graphs(count, n, p, seed):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        iu, ju = np.triu_indices(n, 1)
        keep = rng.random(iu.size) < p
        out.append(Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist())))
    return out


def workloads(graphs):
    """(name, callable(backend)) pairs; each callable returns a checksum."""

    crows = [complement_rows(g) for g in graphs]

    def mis(kern):
        return sum(len(kern.max_independent(list(g.rows), g.full_mask, -1, 0)) for g in graphs)

    def clique(kern):
        return sum(len(kern.max_independent(c, g.full_mask, -1, 0)) for g, c in zip(graphs, crows))

    def dom(kern):
        total = 0
        for g in graphs:
            budget = 1
            while kern.k_dominating(list(g.rows), [1] * g.n, g.full_mask, budget) is None:
                budget += 1
            total += budget
        return total

    def kind(kern):
        return sum(len(kern.max_k_independent(list(g.rows), 1, g.full_mask, 0, -1, 0)) for g in graphs)

    return [("max_independent", mis), ("max_clique", clique), ("k_dominating", dom), ("max_k_independent", kind)]


def timed(fn, backend, repeat):
    runs = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(backend)
        runs.append(time.perf_counter() - start)
    return statistics.median(runs), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=10)
    ap.add_argument("--n", type=int, default=30)
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not _kernels.compiled_available():
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    graphs = random_graphs(args.graphs, args.n, args.p, args.seed)
    c, py = _kernels.get_backend("c"), _kernels.get_backend("python")
    print(f"{args.graphs} graphs, n={args.n}, p={args.p}, median of {args.repeat}")
    print(f"{'kernel':<20}{'python s':>10}{'c s':>10}{'speedup':>9}")
    for name, fn in workloads(graphs):
        tp, rp = timed(fn, py, args.repeat)
        tc, rc = timed(fn, c, args.repeat)
        assert rp == rc, f"{name}: backends disagree ({rp} != {rc})"
        print(f"{name:<20}{tp:>10.3f}{tc:>10.3f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
