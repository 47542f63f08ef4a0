"""Both kernel implementations must agree exactly, node counts included."""

import random

import pytest

from gfree import parse_pattern
from gfree.graphs import Graph
from gfree.patterns import anchored_bad_masks
from gfree import _kernel_py

try:
    from gfree import _speedups
except ImportError:
    _speedups = None

IMPLS = [_kernel_py] + ([_speedups] if _speedups is not None else [])
PAIRS = pytest.mark.skipif(_speedups is None, reason="compiled kernel not built")


def random_case(rng, n_max=7):
    n = rng.randint(1, n_max)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < 0.5
    ]
    g = Graph.from_edges(n, edges)
    pat = parse_pattern(rng.choice(["K2", "K3", "P3", "R:2"]))
    anchored = anchored_bad_masks(g, pat)
    order = list(range(n))
    rng.shuffle(order)
    return g, anchored, order


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.IMPLEMENTATION)
class TestContracts:
    def test_partition_statuses(self, impl):
        rng = random.Random(5)
        for _ in range(50):
            g, anchored, order = random_case(rng)
            k = rng.randint(1, g.n)
            st, assign, nodes = impl.search_partition(anchored, k, order, 10**6)
            assert st in (impl.FOUND, impl.EXHAUSTED)
            assert nodes >= 0
            if st == impl.FOUND:
                assert len(assign) == g.n
                assert all(0 <= c < k for c in assign)

    def test_partition_budget_status(self, impl):
        g, anchored, order = random_case(random.Random(6), n_max=7)
        st, assign, nodes = impl.search_partition(anchored, g.n, order, 0)
        if g.n:
            assert st == impl.BUDGET and assign is None

    def test_list_coloring_respects_lists(self, impl):
        rng = random.Random(8)
        for _ in range(50):
            g, anchored, order = random_case(rng)
            lists = [
                sorted(rng.sample(range(4), rng.randint(1, 3)))
                for _ in range(g.n)
            ]
            st, assign, _ = impl.search_list_coloring(anchored, lists, order, 10**6)
            if st == impl.FOUND:
                assert all(assign[v] in lists[v] for v in range(g.n))

    def test_choosability_trivial(self, impl):
        g, anchored, order = random_case(random.Random(9), n_max=4)
        st, witness, assignments, nodes = impl.search_choosability(
            anchored, g.n, g.n, order, 10**6, 10**6
        )
        assert st == impl.FOUND and witness is None


@PAIRS
class TestEquivalence:
    def test_partition_identical(self):
        rng = random.Random(101)
        for _ in range(120):
            g, anchored, order = random_case(rng)
            k = rng.randint(1, g.n)
            for budget in (10**6, rng.randint(1, 40)):
                assert _kernel_py.search_partition(
                    anchored, k, order, budget
                ) == _speedups.search_partition(anchored, k, order, budget)

    def test_list_coloring_identical(self):
        rng = random.Random(103)
        for _ in range(120):
            g, anchored, order = random_case(rng)
            lists = [
                sorted(rng.sample(range(5), rng.randint(1, 3)))
                for _ in range(g.n)
            ]
            for budget in (10**6, rng.randint(1, 40)):
                assert _kernel_py.search_list_coloring(
                    anchored, lists, order, budget
                ) == _speedups.search_list_coloring(anchored, lists, order, budget)

    def test_choosability_identical(self):
        rng = random.Random(107)
        for _ in range(40):
            g, anchored, order = random_case(rng, n_max=5)
            k = rng.randint(1, 3)
            for budgets in ((10**6, 10**5), (rng.randint(1, 30), rng.randint(1, 50))):
                got_py = _kernel_py.search_choosability(
                    anchored, g.n, k, order, *budgets
                )
                got_cy = _speedups.search_choosability(
                    anchored, g.n, k, order, *budgets
                )
                assert got_py == got_cy
