"""Finite simplicial complexes given by their facets, and the independence complex of a graph.

Faces are frozensets of vertex labels. The canonical face order is dimension-major, then lexicographic by sorted
vertex list; boundary matrices in `edgesquare.homology` inherit their signs from it.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, List, Iterable

import networkx as nx

from edgesquare.graph import Graph, GraphError, VertexSet, complement, connected_components
from edgesquare.independence import maximal_independent_sets

EMPTY_FACE: VertexSet = frozenset()


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    n: int  # vertices are labeled 0..n-1; labels in no facet are ghost vertices
    facets: Tuple[VertexSet, ...]

    def __post_init__(self):
        assert self.facets, "a complex has at least the empty face"
        assert all(0 <= v < self.n for f in self.facets for v in f), f"facet vertex outside 0..{self.n - 1}"
        for i, f in enumerate(self.facets):
            assert not any(f <= h for j, h in enumerate(self.facets) if j != i), f"facet {sorted(f)} is not maximal"

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(frozenset().union(*self.facets)))

    @property
    def ghost_count(self) -> int:
        return self.n - len(self.vertices)

    def contains(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={[sorted(f) for f in self.facets]})"


def from_facets(n: int, sets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """The complex generated by `sets`; non-maximal sets are dropped. No sets at all gives the empty-face complex."""
    sets = {frozenset(s) for s in sets} or {EMPTY_FACE}
    maximal = [s for s in sets if not any(s < t for t in sets)]
    return SimplicialComplex(n, tuple(sorted(maximal, key=sorted)))


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.n, tuple(maximal_independent_sets(g)))


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, (frozenset(range(n)),))


# === faces ============================================================================================================

@lru_cache(maxsize=1 << 12)
def _faces(k: SimplicialComplex) -> Tuple[Tuple[VertexSet, ...], ...]:
    by_size = [set() for _ in range(k.dimension + 2)]
    for f in k.facets:
        by_size[len(f)].add(f)
    for size in range(k.dimension + 1, 0, -1):
        by_size[size - 1].update(f - {v} for f in by_size[size] for v in f)
    return tuple(tuple(sorted(s, key=sorted)) for s in by_size)


def faces(k: SimplicialComplex, dimension: int) -> Tuple[VertexSet, ...]:
    """The faces of the given dimension in canonical order; dimension -1 is the empty face."""
    if not -1 <= dimension <= k.dimension:
        raise ComplexError(f"dimension {dimension} outside -1..{k.dimension}")
    return _faces(k)[dimension + 1]


def all_faces(k: SimplicialComplex) -> List[VertexSet]:
    """Every face, the empty face included, in canonical order."""
    return [f for layer in _faces(k) for f in layer]


@dataclass(frozen=True)
class FVector:
    counts: Tuple[int, ...]  # counts[i] = number of i-dimensional faces, empty face excluded

    @property
    def dimension(self) -> int:
        return len(self.counts) - 1

    def __iter__(self):
        return iter(self.counts)


def f_vector(k: SimplicialComplex) -> FVector:
    return FVector(tuple(len(layer) for layer in _faces(k)[1:]))


def reduced_euler_characteristic(k: SimplicialComplex) -> int:
    return -1 + sum((-1) ** i * f for i, f in enumerate(f_vector(k)))


# === structure ========================================================================================================

def is_connected_complex(k: SimplicialComplex) -> bool:
    """Connectivity of the 1-skeleton over the non-ghost vertices."""
    skeleton = nx.Graph()
    skeleton.add_nodes_from(k.vertices)
    for f in k.facets:
        f = sorted(f)
        skeleton.add_edges_from(zip(f, f[1:]))
    return skeleton.number_of_nodes() <= 1 or nx.is_connected(skeleton)


def join_factors(g: Graph) -> List[VertexSet]:
    """The finest decomposition of g as a join: the vertex sets of the components of the complement.
    A single class means g is not a join."""
    if g.n == 0:
        raise GraphError("join_factors needs a nonempty graph")
    return connected_components(complement(g))


def link(k: SimplicialComplex, face: Iterable[int]) -> Tuple[SimplicialComplex, Tuple[int, ...]]:
    """lk(face) = {t : t and face are disjoint, t | face in k}, relabeled to 0..m-1 over its vertices, together with
    the original label of each new vertex."""
    face = frozenset(face)
    if not k.contains(face):
        raise ComplexError(f"{sorted(face)} is not a face")
    rest = [f - face for f in k.facets if face <= f]
    vertices = tuple(sorted(frozenset().union(*rest)))
    index = {v: i for i, v in enumerate(vertices)}
    return from_facets(len(vertices), (frozenset(index[v] for v in f) for f in rest)), vertices


def cone_points(k: SimplicialComplex) -> VertexSet:
    return frozenset.intersection(*k.facets)


def core(k: SimplicialComplex) -> SimplicialComplex:
    """k without the vertices that lie in every facet; those become ghost vertices."""
    apex = cone_points(k)
    if not apex:
        return k
    return SimplicialComplex(k.n, tuple(sorted((f - apex for f in k.facets), key=sorted)))


def is_pseudomanifold(k: SimplicialComplex) -> bool:
    """Pure of dimension d >= 0 and every (d-1)-face lies in exactly two facets."""
    if k.dimension < 0 or not k.is_pure():
        return False
    return all(sum(ridge <= f for f in k.facets) == 2 for ridge in faces(k, k.dimension - 1))
