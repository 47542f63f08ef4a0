import sys
from functools import lru_cache
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make `oracles` importable

from oracles import from_nx  # noqa: E402


@lru_cache(maxsize=None)
def atlas_by_order():
    """All non-isomorphic graphs on 1..7 vertices, keyed by vertex count.

    networkx's graph atlas is the independent corpus source; it also gives
    us reference graph6 encodings.
    """
    buckets: dict[int, list] = {n: [] for n in range(1, 8)}
    for g in nx.graph_atlas_g()[1:]:  # skip the 0-vertex graph
        buckets[g.number_of_nodes()].append(from_nx(g))
    return buckets


@pytest.fixture(scope="session")
def atlas():
    return atlas_by_order()


def all_graphs_up_to(n_max):
    buckets = atlas_by_order()
    out = []
    for n in range(1, n_max + 1):
        out.extend(buckets[n])
    return out


@pytest.fixture(scope="session")
def graphs_le_5():
    return all_graphs_up_to(5)


@pytest.fixture(scope="session")
def graphs_le_6():
    return all_graphs_up_to(6)


@pytest.fixture(scope="session")
def graphs_le_7():
    return all_graphs_up_to(7)
