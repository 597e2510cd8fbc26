"""Decision procedures for the square of the edge ideal, I(G)^2, of a graph G without isolated vertices.

Every verdict is decided combinatorially:

- Cohen-Macaulay: G is triangle-free and in W2.
- generalized Cohen-Macaulay: G is well-covered and every nontrivial component of every G_v is triangle-free in W2.
- Buchsbaum: G is triangle-free in W2, or G is one of K_n (n >= 3), C_n^c (n >= 6), B_n (n >= 4), Q9, Q12, P10, P12.
- Gorenstein (G locally triangle-free): G is triangle-free in W2, or one of C_n^c (n >= 6), Q9, Q12, P10, P12.

The oracles decide Buchsbaum and Gorenstein a second way, through the homology of the independence complex, so that
the list-based verdicts can be cross-checked.
"""
from dataclasses import dataclass, field as dataclass_field, asdict
from typing import Optional, Dict, Tuple, List

from edgesquare.complex import independence_complex, join_factors
from edgesquare.gallery import GalleryId, match_gallery
from edgesquare.graph import Graph, induced, local_graph, connected_components, is_triangle_free, to_graph6, \
    complement, is_connected, degree
from edgesquare.homology import PrimeField, GF2, is_cm_complex, is_gorenstein_complex
from edgesquare.independence import require_no_isolated, independence_number, is_well_covered, is_w2, \
    is_locally_triangle_free

BUCHSBAUM_LIST = dict(Complete=3, CycleComplement=6, B=4, Q9=9, Q12=12, P10=10, P12=12)
GORENSTEIN_LIST = dict(CycleComplement=6, Q9=9, Q12=12, P10=10, P12=12)
EXCEPTIONAL = dict(Q9=9, Q12=12, P10=10, P12=12)


class HypothesisError(ValueError):
    pass


def listed(match: Optional[GalleryId], table: Dict[str, int]) -> bool:
    """Whether a gallery match is one of the families in `table` with at least the given number of vertices."""
    return match is not None and match.family in table and (match.parameter or table[match.family]) >= table[
        match.family]


def nontrivial_components(g: Graph) -> List[Graph]:
    """Connected components with at least two vertices, as induced subgraphs."""
    return [induced(g, c)[0] for c in connected_components(g) if len(c) >= 2]


def local_components_tf_w2(g: Graph) -> Optional[int]:
    """The first vertex v such that some nontrivial component of G_v is not triangle-free in W2, or None."""
    for v in g.vertices:
        if not all(is_triangle_free(h) and is_w2(h) for h in nontrivial_components(local_graph(g, {v})[0])):
            return v
    return None


# === rules ============================================================================================================

def cm_rule(g: Graph) -> Tuple[bool, str]:
    require_no_isolated(g)
    if not is_triangle_free(g):
        return False, "not triangle-free"
    if not is_w2(g):
        return False, "triangle-free but not in W2"
    return True, "triangle-free and in W2"


def gcm_rule(g: Graph) -> Tuple[bool, str]:
    require_no_isolated(g)
    if not is_well_covered(g):
        return False, "not well-covered"
    v = local_components_tf_w2(g)
    if v is not None:
        return False, f"G_{v} has a nontrivial component that is not triangle-free in W2"
    return True, "well-covered and every nontrivial component of every G_v is triangle-free in W2"


def buchsbaum_rule(g: Graph, match: Optional[GalleryId] = None) -> Tuple[bool, str]:
    cm, _ = cm_rule(g)
    if cm:
        return True, "triangle-free and in W2"
    match = match if match is not None else match_gallery(g)
    if listed(match, BUCHSBAUM_LIST):
        return True, f"isomorphic to {match}"
    return False, "neither triangle-free in W2 nor isomorphic to a listed graph"


def gorenstein_rule(g: Graph, match: Optional[GalleryId] = None) -> Tuple[bool, str]:
    require_no_isolated(g)
    if not is_locally_triangle_free(g):
        raise HypothesisError("the Gorenstein classification needs a locally triangle-free graph")
    cm, _ = cm_rule(g)
    if cm:
        return True, "triangle-free and in W2"
    match = match if match is not None else match_gallery(g)
    if listed(match, GORENSTEIN_LIST):
        return True, f"isomorphic to {match}"
    return False, "neither triangle-free in W2 nor isomorphic to C_n^c (n >= 6), Q9, Q12, P10 or P12"


# === predicates =======================================================================================================

def is_cm_square(g: Graph) -> bool:
    return cm_rule(g)[0]


def is_gcm_square(g: Graph) -> bool:
    return gcm_rule(g)[0]


def is_buchsbaum_square(g: Graph) -> bool:
    return buchsbaum_rule(g)[0]


def is_gorenstein_locally_tf(g: Graph) -> bool:
    return gorenstein_rule(g)[0]


def is_locally_tf_w2_classified(g: Graph) -> bool:
    """Right-hand side of the classification of locally triangle-free W2 graphs with alpha >= 3 that are not joins:
    triangle-free in W2, or isomorphic to Q9, Q12, P10 or P12."""
    require_no_isolated(g)
    if independence_number(g) < 3:
        raise HypothesisError("needs independence number at least 3")
    if len(join_factors(g)) != 1:
        raise HypothesisError("needs a graph that is not a join")
    return is_cm_square(g) or listed(match_gallery(g), EXCEPTIONAL)


def is_locally_tf_w2(g: Graph) -> bool:
    """Left-hand side of the same classification, computed directly."""
    return is_locally_triangle_free(g) and is_w2(g)


# === oracles ==========================================================================================================

def alpha_two_skeleton_rule(g: Graph) -> Tuple[bool, str]:
    """For alpha = 2 the 1-skeleton of the independence complex is the complement; it must be a cycle or a path
    through all n >= 4 vertices."""
    h = complement(g)
    if g.n < 4 or not is_connected(h):
        return False, "complex is not a cycle or a path on all vertices"
    degrees = sorted(degree(h, v) for v in h.vertices)
    if h.edge_count == g.n and degrees == [2] * g.n:
        return True, "complex is a cycle on all vertices"
    if h.edge_count == g.n - 1 and degrees == [1, 1] + [2] * (g.n - 2):
        return True, "complex is a path on all vertices"
    return False, "complex is not a cycle or a path on all vertices"


def buchsbaum_oracle_rule(g: Graph, field: PrimeField = GF2) -> Tuple[bool, str]:
    require_no_isolated(g)
    alpha = independence_number(g)
    if alpha == 1:
        return True, "complete graph"
    if alpha == 2:
        return alpha_two_skeleton_rule(g)
    if not is_cm_complex(independence_complex(g), field):
        return False, f"independence complex is not Cohen-Macaulay over {field}"
    v = local_components_tf_w2(g)
    if v is not None:
        return False, f"G_{v} has a nontrivial component that is not triangle-free in W2"
    return True, f"Cohen-Macaulay over {field} and every I(G_v)^2 is Cohen-Macaulay"


def buchsbaum_square_oracle(g: Graph, field: PrimeField = GF2) -> bool:
    return buchsbaum_oracle_rule(g, field)[0]


def gorenstein_oracle(g: Graph, field: PrimeField = GF2) -> bool:
    return is_gorenstein_complex(independence_complex(g), field)


# === report ===========================================================================================================

@dataclass
class ClassificationReport:
    graph6: str
    n: int
    edges: int
    alpha: int
    well_covered: bool
    w2: bool
    triangle_free: bool
    locally_triangle_free: bool
    join_factor_count: int
    gallery_match: Optional[GalleryId]
    cm_square: bool
    gcm_square: bool
    buchsbaum_square: bool
    gorenstein_locally_tf: Optional[bool]  # None when g is not locally triangle-free
    rules: Dict[str, str] = dataclass_field(default_factory=dict)
    oracle_char: Optional[int] = None
    oracle_buchsbaum: Optional[bool] = None
    oracle_gorenstein: Optional[bool] = None
    agreement: Dict[str, bool] = dataclass_field(default_factory=dict)

    def __post_init__(self):
        assert not self.cm_square or self.buchsbaum_square, "Cohen-Macaulay without Buchsbaum"

    def to_dict(self):
        d = asdict(self)
        d["gallery_match"] = self.gallery_match.to_dict() if self.gallery_match else None
        return d


def classify(g: Graph, oracle: bool = False, field: PrimeField = GF2) -> ClassificationReport:
    require_no_isolated(g)
    match = match_gallery(g)
    cm, cm_why = cm_rule(g)
    gcm, gcm_why = gcm_rule(g)
    buchsbaum, buchsbaum_why = buchsbaum_rule(g, match)
    locally_tf = is_locally_triangle_free(g)
    gorenstein, gorenstein_why = gorenstein_rule(g, match) if locally_tf else (None, "not locally triangle-free")
    rules = dict(cm_square=cm_why, gcm_square=gcm_why, buchsbaum_square=buchsbaum_why,
                 gorenstein_locally_tf=gorenstein_why)
    if gcm and not buchsbaum:
        rules["gcm_square"] += "; generalized Cohen-Macaulay does not imply Buchsbaum here"

    report = ClassificationReport(
        graph6=to_graph6(g),
        n=g.n,
        edges=g.edge_count,
        alpha=independence_number(g),
        well_covered=is_well_covered(g),
        w2=is_w2(g),
        triangle_free=is_triangle_free(g),
        locally_triangle_free=locally_tf,
        join_factor_count=len(join_factors(g)),
        gallery_match=match,
        cm_square=cm,
        gcm_square=gcm,
        buchsbaum_square=buchsbaum,
        gorenstein_locally_tf=gorenstein,
        rules=rules,
    )
    if oracle:
        report.oracle_char = field.p
        report.oracle_buchsbaum, rules["oracle_buchsbaum"] = buchsbaum_oracle_rule(g, field)
        report.oracle_gorenstein = gorenstein_oracle(g, field)
        report.agreement["buchsbaum"] = report.oracle_buchsbaum == buchsbaum
        if locally_tf:
            report.agreement["gorenstein"] = report.oracle_gorenstein == gorenstein
    return report
