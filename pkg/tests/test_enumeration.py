from itertools import combinations

import networkx as nx
import pytest

from edgesquare.enumeration import enumerate_graphs, brute_force_count
from edgesquare.graph import GraphError, to_networkx


def test_class_counts():
    assert [len(list(enumerate_graphs(n))) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert [len(list(enumerate_graphs(n, no_isolated=True))) for n in range(1, 7)] == [0, 1, 2, 7, 23, 122]
    assert len(list(enumerate_graphs(4, connected=True))) == 6


def test_brute_force_count():
    for n in range(1, 7):
        assert brute_force_count(n) == len(list(enumerate_graphs(n)))
        assert brute_force_count(n, no_isolated=True) == len(list(enumerate_graphs(n, no_isolated=True)))


def test_representatives_are_pairwise_non_isomorphic():
    graphs = [to_networkx(g) for g in enumerate_graphs(5)]
    assert not any(nx.is_isomorphic(g, h) for g, h in combinations(graphs, 2))


def test_order_is_deterministic():
    assert list(enumerate_graphs(5)) == list(enumerate_graphs(5))


def test_out_of_range():
    for n in [0, 10]:
        with pytest.raises(GraphError):
            list(enumerate_graphs(n))
