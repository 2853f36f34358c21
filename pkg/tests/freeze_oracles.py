"""Regenerate tests/data/oracle_frozen.json from the exhaustive oracles.

    python3 tests/freeze_oracles.py
"""

import json
from pathlib import Path

import numpy as np

from starfree import brute
from starfree.graph import Graph, emit_graph6

OUT = Path(__file__).parent / "data" / "oracle_frozen.json"
SEED = 20240611
COUNT = 120


def graphs():
    rng = np.random.Generator(np.random.Philox(SEED))
    for _ in range(COUNT):
        n = int(rng.integers(1, 13))
        p = float(rng.random())
        iu, ju = np.triu_indices(n, 1)
        keep = rng.random(iu.size) < p
        yield Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def row(g):
    def pair(v):
        value, witness = v
        return [int(value), [int(x) for x in witness]]

    return {
        "graph6": emit_graph6(g),
        "alpha": pair(brute.alpha(g)),
        "gamma": pair(brute.gamma(g)),
        "gamma_2": pair(brute.gamma_k(g, 2)),
        "alpha_1": pair(brute.alpha_k(g, 1)),
        "chi": int(brute.chi(g)),
        "bipartite": pair(brute.alphaF_chromatic(g, 2)),
        "chromatic_3": pair(brute.alphaF_chromatic(g, 3)),
        "trianglefree": pair(brute.alphaF_kqfree(g, 3)),
    }


def main():
    OUT.write_text(json.dumps([row(g) for g in graphs()], indent=0) + "\n")
    print(f"wrote {COUNT} graphs to {OUT}")


if __name__ == "__main__":
    main()
