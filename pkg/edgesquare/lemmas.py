"""Structural properties of W2 graphs, locally triangle-free graphs and their independence complexes, one check per
property, plus the agreement checks between the list-based classifications and the homological oracles.

A check takes a graph without isolated vertices and a field and returns None when its hypotheses do not apply to the
graph, True when the property holds and False for a counterexample.
"""
from itertools import combinations
from typing import Optional, Callable, Dict

from edgesquare.classify import is_buchsbaum_square, buchsbaum_square_oracle, is_gorenstein_locally_tf, \
    gorenstein_oracle, is_locally_tf_w2, is_locally_tf_w2_classified, is_cm_square, is_gcm_square, \
    nontrivial_components
from edgesquare.complex import independence_complex, join_factors, is_connected_complex
from edgesquare.gallery import is_isomorphic, cycle_complement, match_gallery
from edgesquare.graph import Graph, local_graph, induced, is_bipartite, to_graph6, parse_graph6, triangles, \
    is_connected, independent_sets, is_independent
from edgesquare.homology import PrimeField, GF2, GF32003, is_gorenstein_complex, is_cm_complex, \
    reduced_betti_numbers
from edgesquare.independence import independence_number, is_well_covered, is_w2, is_locally_triangle_free

Check = Callable[[Graph, PrimeField], Optional[bool]]


def _not_join(g: Graph) -> bool:
    return len(join_factors(g)) == 1


def _triangle_hypotheses(g: Graph) -> bool:
    """Locally triangle-free, in W2, alpha >= 3 and not a join."""
    return independence_number(g) >= 3 and _not_join(g) and is_locally_tf_w2(g)


def _one_edge_plus_isolated(h: Graph, isolated: int) -> bool:
    return h.edge_count == 1 and h.n == 2 + isolated


def _ordered_triangle_edges(g: Graph):
    """(a, b, c) for every triangle and every ordered choice of its edge ab."""
    for t in triangles(g):
        for a, b in combinations(t, 2):
            c, = set(t) - {a, b}
            yield a, b, c
            yield b, a, c


# === oracle agreement =================================================================================================

def buchsbaum_agreement(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    return is_buchsbaum_square(g) == buchsbaum_square_oracle(g, field)


def gorenstein_agreement(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    if not is_locally_triangle_free(g):
        return None
    return is_gorenstein_locally_tf(g) == gorenstein_oracle(g, field)


def main_theorem(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    if independence_number(g) < 3 or not _not_join(g):
        return None
    return is_locally_tf_w2(g) == is_locally_tf_w2_classified(g)


def main_theorem_exceptional(g: Graph) -> Optional[str]:
    """The gallery family of a locally triangle-free W2 graph (alpha >= 3, not a join) that is not triangle-free."""
    if independence_number(g) < 3 or not _not_join(g) or not is_locally_tf_w2(g) or is_cm_square(g):
        return None
    match = match_gallery(g)
    return str(match) if match else "unmatched"


def cm_implications(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    if not is_cm_square(g):
        return None
    return is_buchsbaum_square(g) and is_gcm_square(g)


def gorenstein_implies_cm(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    k = independence_complex(g)
    if not is_gorenstein_complex(k, field):
        return None
    return is_cm_complex(k, field)


def betti_fields(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    k = independence_complex(g)
    return reduced_betti_numbers(k, GF2).betti == reduced_betti_numbers(k, GF32003).betti


def graph6_roundtrip(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    return parse_graph6(to_graph6(g)) == g


# === independent sets and W2 ==========================================================================================

def locally_well_covered(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """For well-covered g and independent S: G_S is well-covered with alpha(G_S) = alpha(g) - |S|."""
    if not is_well_covered(g):
        return None
    alpha = independence_number(g)
    for s in independent_sets(g):
        h, _ = local_graph(g, s)
        if not is_well_covered(h) or independence_number(h) != alpha - len(s):
            return False
    return True


def locally_w2(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """For g in W2 and independent S with |S| < alpha(g): G_S is in W2 without isolated vertices."""
    if not is_w2(g):
        return None
    alpha = independence_number(g)
    for s in independent_sets(g):
        if len(s) >= alpha:
            continue
        h, _ = local_graph(g, s)
        if h.isolated_vertices() or not is_w2(h):
            return False
    return True


def bipartite_w2(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """A bipartite graph in W2 is a disjoint union of edges."""
    if is_bipartite(g) is None or not is_w2(g):
        return None
    return all(d == 1 for d in g.degrees())


def small_cases(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """A locally triangle-free W2 graph with alpha = 1 is complete (n >= 2); with alpha = 2 and not a join it is
    C_n^c, n >= 4.

    The alpha = 2 statement needs a connected complement: joins of C_k^c graphs, such as the join of two copies of
    2K2 (graph6 GQ~vvg), are locally triangle-free W2 graphs with alpha = 2 whose complement is a union of cycles.
    """
    alpha = independence_number(g)
    if alpha > 2 or not is_locally_tf_w2(g):
        return None
    if alpha == 2 and not _not_join(g):
        return None
    if alpha == 1:
        return g.n >= 2 and g.edge_count == g.n * (g.n - 1) // 2
    return g.n >= 4 and is_isomorphic(g, cycle_complement(g.n)) is not None


def locally_edge(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """For locally triangle-free g in W2 and an edge ab: G_ab is empty, or well-covered with alpha(g) - 1."""
    if not is_locally_tf_w2(g):
        return None
    alpha = independence_number(g)
    for a, b in g.edges:
        h, _ = local_graph(g, {a, b})
        if h.n and (not is_well_covered(h) or independence_number(h) != alpha - 1):
            return False
    return True


def discrete_w2(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """A connected, well-covered, locally triangle-free graph with alpha >= 3 that is not a join, and whose every G_v
    has all nontrivial components in W2, is in W2."""
    if not (is_connected(g) and is_well_covered(g) and independence_number(g) >= 3 and _not_join(g)
            and is_locally_triangle_free(g)):
        return None
    if not all(is_w2(h) for v in g.vertices for h in nontrivial_components(local_graph(g, {v})[0])):
        return None
    return is_w2(g)


def empty_set(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """In a triangle-free W2 graph, no nonempty U is complete to the rest V - U when |V - U| >= 2."""
    if not is_cm_square(g):
        return None
    for size in range(2, g.n):
        for rest in combinations(g.vertices, size):
            common = frozenset.intersection(*(g.adjacency[w] for w in rest))
            if common and common | set(rest) == set(g.vertices):
                return False
    return True


# === joins and triangles ==============================================================================================

def disconnected(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """g is a join exactly when its independence complex is disconnected."""
    return (len(join_factors(g)) >= 2) == (not is_connected_complex(independence_complex(g)))


def triangle_edge(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """Under the triangle hypotheses every edge ab in a triangle has G_ab nonempty with alpha(g) - 1."""
    if not triangles(g) or not _triangle_hypotheses(g):
        return None
    alpha = independence_number(g)
    for a, b, _ in _ordered_triangle_edges(g):
        h, _ = local_graph(g, {a, b})
        if not h.n or independence_number(h) != alpha - 1:
            return False
    return True


def intersection(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """Under the triangle hypotheses (triangles not required) an edge v1v2 with G_{v1v2} empty has
    N(v1) and N(v2) disjoint."""
    if not _triangle_hypotheses(g):
        return None
    verdicts = [not (g.adjacency[u] & g.adjacency[v]) for u, v in g.edges if not local_graph(g, {u, v})[0].n]
    return all(verdicts) if verdicts else None


def lemma_ga(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """Under the triangle hypotheses, for a triangle (abc) with G_ab nonempty and A = N(a) - N[b] not independent:
    G[A] is one edge plus alpha - 2 isolated vertices, and G_ab has 2 (alpha - 2) vertices."""
    if not triangles(g) or not _triangle_hypotheses(g):
        return None
    alpha, verdicts = independence_number(g), []
    for a, b, _ in _ordered_triangle_edges(g):
        h, _ = local_graph(g, {a, b})
        big_a = g.adjacency[a] - g.adjacency[b] - {b}
        if not h.n or is_independent(g, big_a):
            continue
        verdicts.append(_one_edge_plus_isolated(induced(g, big_a)[0], alpha - 2) and h.n == 2 * (alpha - 2))
    return all(verdicts) if verdicts else None


def triangle_neighborhood(g: Graph, field: PrimeField = GF2) -> Optional[bool]:
    """Under the triangle hypotheses, with A = N(a) - N[b] and I = N(a) & N(b) for a triangle (abc):
    every vertex of I is adjacent to all of G_ab, no isolated vertex of G[A] has a neighbor in I, I = {c} when A is
    independent, and otherwise alpha = 3, G[A] is one edge plus one isolated vertex and G_ab is two isolated vertices.
    """
    if not triangles(g) or not _triangle_hypotheses(g):
        return None
    alpha = independence_number(g)
    for a, b, c in _ordered_triangle_edges(g):
        h, rest = local_graph(g, {a, b})
        big_a = g.adjacency[a] - g.adjacency[b] - {b}
        big_i = g.adjacency[a] & g.adjacency[b]
        if not all(set(rest) <= g.adjacency[x] for x in big_i):
            return False
        ga, a_vertices = induced(g, big_a)
        if any(big_i & g.adjacency[a_vertices[v]] for v in ga.isolated_vertices()):
            return False
        if not ga.edge_count:
            if big_i != {c}:
                return False
        elif not (alpha == 3 and _one_edge_plus_isolated(ga, 1) and h.n == 2 and not h.edge_count):
            return False
    return True


CHECKS: Dict[str, Check] = dict(
    buchsbaum_agreement=buchsbaum_agreement,
    gorenstein_agreement=gorenstein_agreement,
    main_theorem=main_theorem,
    cm_implications=cm_implications,
    gorenstein_implies_cm=gorenstein_implies_cm,
    betti_fields=betti_fields,
    graph6_roundtrip=graph6_roundtrip,
    locally_well_covered=locally_well_covered,
    locally_w2=locally_w2,
    bipartite_w2=bipartite_w2,
    small_cases=small_cases,
    locally_edge=locally_edge,
    triangle_edge=triangle_edge,
    lemma_ga=lemma_ga,
    intersection=intersection,
    discrete_w2=discrete_w2,
    disconnected=disconnected,
    empty_set=empty_set,
    triangle_neighborhood=triangle_neighborhood,
)

# checks that compute homology; sweeps run them only up to `oracle_max_n` vertices
HOMOLOGICAL = frozenset({"buchsbaum_agreement", "gorenstein_agreement", "gorenstein_implies_cm", "betti_fields"})
