"""Independent sets: maximal independent sets, the independence number, and the well-covered / W2 / locally
triangle-free predicates."""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import networkx as nx

from edgesquare.graph import Graph, GraphError, VertexSet, delete_vertices, local_graph, is_triangle_free, \
    to_networkx


class IsolatedVertexError(GraphError):
    pass


def require_no_isolated(g: Graph):
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(f"graph has isolated vertices {isolated}; only graphs without isolated vertices are "
                                  f"considered")


@lru_cache(maxsize=1 << 14)
def _maximal_independent_sets(g: Graph) -> Tuple[VertexSet, ...]:
    if g.n == 0:
        return frozenset(),
    cliques = nx.find_cliques(nx.complement(to_networkx(g)))
    return tuple(sorted((frozenset(c) for c in cliques), key=sorted))


def maximal_independent_sets(g: Graph) -> List[VertexSet]:
    """All inclusion-maximal independent sets, sorted lexicographically by their sorted vertex lists.
    The empty graph has the single maximal independent set {}."""
    return list(_maximal_independent_sets(g))


def independence_number(g: Graph) -> int:
    return max(len(s) for s in _maximal_independent_sets(g))


@dataclass(frozen=True)
class IndependenceSummary:
    alpha: int
    mis_count: int
    mis_sizes: Tuple[int, ...]  # sorted
    well_covered: bool

    def __post_init__(self):
        assert self.alpha == max(self.mis_sizes), f"alpha={self.alpha} but sizes are {self.mis_sizes}"
        assert self.well_covered == (len(set(self.mis_sizes)) == 1)


def summarize(g: Graph) -> IndependenceSummary:
    sizes = tuple(sorted(len(s) for s in _maximal_independent_sets(g)))
    return IndependenceSummary(max(sizes), len(sizes), sizes, len(set(sizes)) == 1)


def is_well_covered(g: Graph) -> bool:
    return len({len(s) for s in _maximal_independent_sets(g)}) == 1


def is_w2(g: Graph) -> bool:
    """Well-covered, and deleting any single vertex (plain deletion) leaves a well-covered graph with the same
    independence number."""
    require_no_isolated(g)
    if not is_well_covered(g):
        return False
    alpha = independence_number(g)
    for v in g.vertices:
        h, _ = delete_vertices(g, {v})
        if not is_well_covered(h) or independence_number(h) != alpha:
            return False
    return True


def is_locally_triangle_free(g: Graph) -> bool:
    """G_v is triangle-free for every vertex v (g itself may contain triangles)."""
    return all(is_triangle_free(local_graph(g, {v})[0]) for v in g.vertices)
