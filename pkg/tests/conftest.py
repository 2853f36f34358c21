import numpy as np
import pytest

from starfree import _kernels
from starfree.graph import Graph

BACKENDS = ["python"] + (["c"] if _kernels.compiled_available() else [])


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def seeded_graphs(seed: int, count: int, max_n: int, min_n: int = 1):
    rng = np.random.Generator(np.random.Philox(seed))
    for _ in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        yield random_graph(rng, n, float(rng.random()))


@pytest.fixture(params=BACKENDS)
def backend(request):
    previous = _kernels.active
    _kernels.use_backend(request.param)
    yield request.param
    _kernels.active = previous
