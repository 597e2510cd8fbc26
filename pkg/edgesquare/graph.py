"""Simple undirected graphs on vertices 0..n-1 and the derived graphs used throughout: complements, induced
subgraphs, G_S = G minus N[S], joins. Graphs are immutable; derived graphs come back together with the tuple of
parent vertices they were built from (`vertices[new] == old`).

Interchange formats: graph6 (one graph per line, n <= 62) and a plain edge list ("n m" header, then "u v" lines,
'#' starts a comment).
"""
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Tuple, Optional, List, Sequence

import networkx as nx

VertexSet = FrozenSet[int]

GRAPH6_MAX_N = 62


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: Tuple[VertexSet, ...]

    def __post_init__(self):
        assert len(self.adjacency) == self.n, f"expected {self.n} adjacency sets, got {len(self.adjacency)}"
        for v, nbrs in enumerate(self.adjacency):
            assert v not in nbrs, f"loop at {v}"
            assert all(v in self.adjacency[u] for u in nbrs), f"adjacency of {v} is not symmetric"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in sorted(self.adjacency[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degrees(self) -> List[int]:
        return [len(a) for a in self.adjacency]

    def isolated_vertices(self) -> List[int]:
        return [v for v in self.vertices if not self.adjacency[v]]

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges})"


def from_edge_list(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adjacency = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adjacency))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def vertex_set(g: Graph, s: Iterable[int]) -> VertexSet:
    s = frozenset(s)
    bad = [v for v in s if not 0 <= v < g.n]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} are not in 0..{g.n - 1}")
    return s


# === graph6 ===========================================================================================================

def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise Graph6Error(f"only n <= {GRAPH6_MAX_N} is supported, got {g.n}")
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()


def parse_graph6(text: str) -> Graph:
    """networkx decodes; the size limit, the length and the zero padding are checked here first."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty graph6 line")
    data = [ord(c) - 63 for c in line]
    if any(not 0 <= x <= 63 for x in data):
        raise Graph6Error(f"character out of range 63..126 in {line!r}")
    n, data = data[0], data[1:]
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"multi-byte size header not supported (n > {GRAPH6_MAX_N}) in {line!r}")
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data characters for n={n}, got {len(data)} in {line!r}")
    if data and data[-1] & ((1 << (-nbits % 6)) - 1):
        raise Graph6Error(f"nonzero padding bits in {line!r}")
    h = nx.from_graph6_bytes(line.encode())
    return from_edge_list(n, h.edges)


# === edge-list text ===================================================================================================

def parse_edge_list(text: str) -> Graph:
    """Parses an "n m" header followed by m "u v" lines; '#' lines are comments."""
    rows = [line.split('#', 1)[0].split() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with an 'n m' header")
    try:
        (n, m), edges = map(int, rows[0]), [tuple(map(int, r)) for r in rows[1:]]
    except ValueError as e:
        raise GraphError(f"non-integer token in edge list: {e}") from None
    if any(len(e) != 2 for e in edges):
        raise GraphError("every edge line must have exactly two vertices")
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def to_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.edge_count}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def split_edge_lists(lines: Sequence[str]) -> List[Tuple[int, str]]:
    """Splits a stream of edge-list blocks into (first line number, block text) pairs.
    Each block starts at a header line "n m" and takes the following m edge lines."""
    blocks, i = [], 0
    while i < len(lines):
        head = lines[i].split('#', 1)[0].split()
        if not head:
            i += 1
            continue
        start, count = i, int(head[1]) if len(head) == 2 and head[1].isdigit() else 0
        block, i = [lines[i]], i + 1
        while count and i < len(lines):
            if lines[i].split('#', 1)[0].strip():
                count -= 1
            block.append(lines[i])
            i += 1
        blocks.append((start + 1, "\n".join(block)))
    return blocks


# === derived graphs ===================================================================================================

def complement(g: Graph) -> Graph:
    everyone = frozenset(g.vertices)
    return Graph(g.n, tuple(everyone - a - {v} for v, a in enumerate(g.adjacency)))


def induced(g: Graph, s: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """G[S] on relabeled vertices 0..|S|-1, and the parent vertex of each new vertex."""
    vertices = tuple(sorted(vertex_set(g, s)))
    index = {v: i for i, v in enumerate(vertices)}
    adjacency = tuple(frozenset(index[u] for u in g.adjacency[v] if u in index) for v in vertices)
    return Graph(len(vertices), adjacency), vertices


def delete_vertices(g: Graph, s: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    return induced(g, set(g.vertices) - vertex_set(g, s))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """The graph with vertex v renamed to perm[v]."""
    assert sorted(perm) == list(g.vertices), f"{perm} is not a permutation of 0..{g.n - 1}"
    adjacency = [frozenset()] * g.n
    for v, a in enumerate(g.adjacency):
        adjacency[perm[v]] = frozenset(perm[u] for u in a)
    return Graph(g.n, tuple(adjacency))


def open_neighborhood(g: Graph, s: Iterable[int]) -> VertexSet:
    s = vertex_set(g, s)
    return frozenset().union(*(g.adjacency[v] for v in s)) - s


def closed_neighborhood(g: Graph, s: Iterable[int]) -> VertexSet:
    s = vertex_set(g, s)
    return s | open_neighborhood(g, s)


def local_graph(g: Graph, s: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """G_S = G minus N_G[S]. For an edge ab, G_ab is local_graph(g, {a, b})."""
    return delete_vertices(g, closed_neighborhood(g, s))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = tuple(frozenset(u + g1.n for u in a) for a in g2.adjacency)
    return Graph(g1.n + g2.n, g1.adjacency + shifted)


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 * G2: vertices of g1 first, then g2 shifted by g1.n, plus every cross edge."""
    left, right = frozenset(range(g1.n)), frozenset(range(g1.n, g1.n + g2.n))
    union = disjoint_union(g1, g2)
    return Graph(union.n, tuple(a | (right if v < g1.n else left) for v, a in enumerate(union.adjacency)))


# === basic structure ==================================================================================================

def degree(g: Graph, v: int) -> int:
    return len(g.adjacency[v])


def connected_components(g: Graph) -> List[VertexSet]:
    """Components in order of their smallest vertex."""
    return sorted((frozenset(c) for c in nx.connected_components(to_networkx(g))), key=min)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_bipartite(g: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """A bipartition (side of vertex 0 first) if g has no odd cycle, else None."""
    try:
        color = nx.bipartite.color(to_networkx(g))
    except nx.NetworkXError:
        return None
    first = color[0] if g.n else 1
    return (frozenset(v for v in g.vertices if color[v] == first),
            frozenset(v for v in g.vertices if color[v] != first))


def triangles(g: Graph) -> List[Tuple[int, int, int]]:
    return [(a, b, c) for a, b in g.edges for c in sorted(g.adjacency[a] & g.adjacency[b]) if c > b]


def is_triangle_free(g: Graph) -> bool:
    return not any(g.adjacency[a] & g.adjacency[b] for a, b in g.edges)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = vertex_set(g, s)
    return all(not (g.adjacency[v] & s) for v in s)


def independent_sets(g: Graph) -> List[VertexSet]:
    """Every independent set, the empty set included, by size then lexicographically. Exponential; small graphs only."""
    return [frozenset(c) for k in range(g.n + 1) for c in combinations(g.vertices, k) if is_independent(g, c)]
