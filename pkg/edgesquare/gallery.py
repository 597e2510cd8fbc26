"""The named graphs of the classification (K_n, C_n^c, B_n, Q9, Q12, P10, P12, plus cycles and paths) and an
isomorphism matcher that recognizes them.

The four exceptional graphs are built from labeled edge lists; `LABELS[name][v]` is the label of vertex v.
"""
from dataclasses import dataclass
from itertools import chain
from typing import Optional, Tuple, List, Dict, Sequence

from edgesquare.graph import Graph, GraphError, from_edge_list, complement
from edgesquare.independence import maximal_independent_sets

FAMILIES = ("Complete", "Cycle", "Path", "CycleComplement", "B", "Q9", "Q12", "P10", "P12")
MATCH_ORDER = ("Complete", "CycleComplement", "B", "Q9", "Q12", "P10", "P12")


@dataclass(frozen=True)
class GalleryId:
    family: str
    parameter: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None  # witness[v] = vertex of the canonical construction matched to v

    def __str__(self):
        return self.family if self.parameter is None else f"{self.family}({self.parameter})"

    def to_dict(self):
        return dict(family=self.family, parameter=self.parameter, witness=list(self.witness) if self.witness else None)


# === families =========================================================================================================

def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete(n) needs n >= 1, got {n}")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle(n) needs n >= 3, got {n}")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path(n) needs n >= 1, got {n}")
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def cycle_complement(n: int) -> Graph:
    if n < 4:
        raise GraphError(f"cycle_complement(n) needs n >= 4, got {n}")
    return complement(cycle(n))


def b_graph(n: int, literal: bool = False) -> Graph:
    """B_n, the complement of the n-path: edges x_i x_j for i + 1 < j (0-based here), so that its independence
    complex is the (n-1)-path.

    With `literal=True` the edge set {x_i x_j | 3 <= i+1 < j <= n} (1-based) is taken as written instead; it leaves
    x_1 isolated.
    """
    if n < 4:
        raise GraphError(f"b_graph(n) needs n >= 4, got {n}")
    first = 1 if literal else 0
    return from_edge_list(n, [(i, j) for i in range(first, n) for j in range(i + 2, n)])


def _labeled(labels: Sequence[str], edges: str) -> Graph:
    index = {name: v for v, name in enumerate(labels)}
    pairs = [tuple(e.split("-")) for e in edges.split()]
    return from_edge_list(len(labels), [(index[a], index[b]) for a, b in pairs])


LABELS = dict(
    Q9=("a", "b", "c", "a1", "a2", "b1", "b2", "c1", "c2"),
    Q12=("a", "b", "c", "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"),
    P10=("a", "b", "c", "x", "y", "a1", "b1", "b2", "c1", "c2"),
    P12=("a", "b", "c", "d", "x", "y", "z", "t", "a1", "b1", "c1", "c2"),
)

# the permutation pairing A with B is the transposition for Q9 and (3, 1, 2) for Q12
EDGES = dict(
    Q9="a-b a-c b-c a-a1 a-a2 b-b1 b-b2 c-c1 c-c2 a1-c1 a2-c2 b1-c1 b2-c2 a2-b1 a1-b2",
    Q12="a-b a-c b-c a-a1 a-a2 a-a3 b-b1 b-b2 b-b3 c-c1 c-c2 c-c3 "
        "a1-c1 a2-c2 a3-c3 b1-c1 b2-c2 b3-c3 a3-b1 a1-b2 a2-b3",
    P10="a-b a-c a-a1 a-x a-y b-c b-b1 b-b2 c-c1 c-c2 x-y x-b2 x-c1 y-b1 y-c2 "
        "a1-b1 a1-b2 a1-c1 a1-c2 b1-c1 b2-c2",
    P12="a-b a-a1 a-c a-d a-x a-y b-b1 b-c b-d b-t b-z c-x c-z c-c1 c-c2 d-y d-t d-c1 d-c2 a1-b1 "
        "a1-z a1-t a1-c1 a1-c2 b1-x b1-y b1-c1 b1-c2 x-y x-t x-c1 y-z y-c2 z-t z-c1 t-c2",
)

# the 33 maximal independent sets of Q12
Q12_FACETS = """
ab1b2b3 ab1b2c3 ab1b3c2 ab1c2c3 ab2b3c1 ab2c1c3 ab3c1c2
ac1c2c3 ba1a2a3 ba1a2c3 ba1a3c2 ba1c2c3 ba2a3c1 ba2c1c3
ba3c1c2 bc1c2c3 ca1a2a3 ca1a2b1 ca1a3b3 ca1b1b3 ca2a3b2
ca2b1b2 ca3b2b3 cb1b2b3 a1a2b1c3 a1a3b3c2 a1b1b3c2 a1b1c2c3
a2a3b2c1 a2b1b2c3 a2b2c1c3 a3b2b3c1 a3b3c1c2
""".split()


def parse_labeled_set(word: str) -> List[str]:
    """'ab1b2c3' -> ['a', 'b1', 'b2', 'c3']"""
    out = []
    for ch in word:
        if ch.isdigit():
            out[-1] += ch
        else:
            out.append(ch)
    return out


def q12_table() -> List[frozenset]:
    index = {name: v for v, name in enumerate(LABELS["Q12"])}
    return [frozenset(index[x] for x in parse_labeled_set(w)) for w in Q12_FACETS]


def q9() -> Graph:
    return _labeled(LABELS["Q9"], EDGES["Q9"])


def q12() -> Graph:
    g = _labeled(LABELS["Q12"], EDGES["Q12"])
    assert set(maximal_independent_sets(g)) == set(q12_table()), "Q12 does not reproduce its facet table"
    return g


def p10() -> Graph:
    return _labeled(LABELS["P10"], EDGES["P10"])


def p12() -> Graph:
    return _labeled(LABELS["P12"], EDGES["P12"])


def construct(family: str, n: Optional[int] = None, literal: bool = False) -> Graph:
    fixed = dict(Q9=q9, Q12=q12, P10=p10, P12=p12)
    if family in fixed:
        return fixed[family]()
    if n is None:
        raise GraphError(f"family {family} needs a parameter n")
    if family == "B":
        return b_graph(n, literal=literal)
    ctors = dict(Complete=complete, Cycle=cycle, Path=path, CycleComplement=cycle_complement)
    if family not in ctors:
        raise GraphError(f"unknown family {family!r}, expected one of {FAMILIES}")
    return ctors[family](n)


# === isomorphism ======================================================================================================

def color_refinement(*graphs: Graph) -> List[List[int]]:
    """Stable vertex colorings of all graphs, computed jointly so colors are comparable across graphs.
    Colors start as degrees and are refined by the multiset of neighbor colors; names are ranks of sorted
    signatures, so the result is invariant under relabeling."""
    colors = [g.degrees() for g in graphs]
    count = len(set(chain.from_iterable(colors)))
    while True:
        signatures = [[(c[v], tuple(sorted(c[u] for u in g.adjacency[v]))) for v in g.vertices]
                      for g, c in zip(graphs, colors)]
        palette = {s: i for i, s in enumerate(sorted(set(chain.from_iterable(signatures))))}
        colors = [[palette[s] for s in sig] for sig in signatures]
        if len(palette) == count:
            return colors
        count = len(palette)


def invariant(g: Graph) -> tuple:
    """An isomorphism invariant used to bucket graphs before exact isomorphism tests."""
    colors, = color_refinement(g)
    profile = sorted((colors[v], tuple(sorted(colors[u] for u in g.adjacency[v]))) for v in g.vertices)
    return g.n, g.edge_count, tuple(profile)


def is_isomorphic(g1: Graph, g2: Graph) -> Optional[Tuple[int, ...]]:
    """The lexicographically first bijection f with uv in E(g1) <=> f(u)f(v) in E(g2), or None."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    c1, c2 = color_refinement(g1, g2)
    if sorted(c1) != sorted(c2):
        return None
    candidates = {}
    for w in g2.vertices:
        candidates.setdefault(c2[w], []).append(w)

    mapping, used = [-1] * g1.n, [False] * g2.n

    def extend(v: int) -> bool:
        if v == g1.n:
            return True
        for w in candidates.get(c1[v], ()):
            if used[w] or any((u in g1.adjacency[v]) != (mapping[u] in g2.adjacency[w]) for u in range(v)):
                continue
            mapping[v], used[w] = w, True
            if extend(v + 1):
                return True
            mapping[v], used[w] = -1, False
        return False

    if not extend(0):
        return None
    witness = tuple(mapping)
    assert all((witness[u] in g2.adjacency[witness[v]]) for u, v in g1.edges), "witness is not an isomorphism"
    return witness


def _screen(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and sorted(g.degrees()) == sorted(h.degrees())


def match_gallery(g: Graph) -> Optional[GalleryId]:
    """The first family in MATCH_ORDER that g is isomorphic to, with witness."""
    fixed_orders = dict(Q9=9, Q12=12, P10=10, P12=12)
    for family in MATCH_ORDER:
        if family in fixed_orders:
            if g.n != fixed_orders[family]:
                continue
            parameter, h = None, construct(family)
        elif family == "Complete":
            if g.n < 1:
                continue
            parameter, h = g.n, complete(g.n)
        else:
            if g.n < 4:
                continue
            parameter, h = g.n, construct(family, g.n)
        if not _screen(g, h):
            continue
        witness = is_isomorphic(g, h)
        if witness is not None:
            return GalleryId(family, parameter, witness)
    return None


def gallery(max_n: int = 12, literal: bool = False) -> Dict[str, Graph]:
    """Every named construction up to `max_n` vertices, keyed like 'CycleComplement(6)' or 'Q9'."""
    out = {}
    minimum = dict(Complete=1, Cycle=3, Path=1, CycleComplement=4, B=4)
    for family, lo in minimum.items():
        for n in range(lo, max_n + 1):
            out[str(GalleryId(family, n))] = construct(family, n, literal=literal)
    for family, n in (("Q9", 9), ("P10", 10), ("Q12", 12), ("P12", 12)):
        if n <= max_n:
            out[family] = construct(family)
    return out
