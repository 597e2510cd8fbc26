import numpy as np
import pytest

from edgesquare.complex import independence_complex, from_facets, simplex, faces, all_faces, f_vector, \
    reduced_euler_characteristic, is_connected_complex, join_factors, link, core, cone_points, is_pseudomanifold, \
    ComplexError, EMPTY_FACE
from edgesquare.gallery import cycle, path, complete, cycle_complement, b_graph, q9, q12, p10, p12
from edgesquare.graph import join, GraphError, from_edge_list
from edgesquare.independence import maximal_independent_sets


def test_independence_complex_of_small_graphs():
    k = independence_complex(complete(3))
    assert k.facets == ({0}, {1}, {2})
    assert tuple(f_vector(k)) == (3,)
    k = independence_complex(cycle_complement(6))
    assert tuple(f_vector(k)) == (6, 6)
    assert k.dimension == 1 and k.is_pure()


def test_exceptional_f_vectors():
    assert tuple(f_vector(independence_complex(q9()))) == (9, 21, 14)
    assert tuple(f_vector(independence_complex(p10()))) == (10, 24, 16)
    assert tuple(f_vector(independence_complex(p12()))) == (12, 30, 20)
    assert tuple(f_vector(independence_complex(q12()))) == (12, 45, 66, 33)


def test_reduced_euler_characteristic():
    assert reduced_euler_characteristic(independence_complex(q9())) == 1
    assert reduced_euler_characteristic(independence_complex(q12())) == -1
    assert reduced_euler_characteristic(independence_complex(cycle_complement(7))) == -1
    assert reduced_euler_characteristic(from_facets(0, [])) == -1


def test_faces():
    k = independence_complex(cycle(4))
    assert faces(k, -1) == (EMPTY_FACE,)
    assert faces(k, 0) == ({0}, {1}, {2}, {3})
    assert faces(k, 1) == ({0, 2}, {1, 3})
    with pytest.raises(ComplexError):
        faces(k, 2)
    k = independence_complex(q12())
    assert len(all_faces(k)) == 1 + sum(f_vector(k))


def test_from_facets_drops_non_maximal():
    k = from_facets(4, [{0, 1}, {0}, {2, 3}, {1, 0}])
    assert k.facets == ({0, 1}, {2, 3})
    assert from_facets(3, []).facets == (EMPTY_FACE,)


def test_connectivity_and_joins():
    assert not is_connected_complex(independence_complex(complete(2)))
    assert is_connected_complex(independence_complex(cycle(5)))
    assert join_factors(complete(4)) == [{0}, {1}, {2}, {3}]
    assert len(join_factors(cycle(5))) == 1
    g = join(cycle(5), complete(1))
    assert join_factors(g) == [{0, 1, 2, 3, 4}, {5}]
    with pytest.raises(GraphError):
        join_factors(from_edge_list(0, []))


def test_independence_complex_of_a_join_is_disjoint_union():
    g = join(cycle(5), cycle(4))
    expected = set(maximal_independent_sets(cycle(5))) | {frozenset(v + 5 for v in s)
                                                           for s in maximal_independent_sets(cycle(4))}
    assert set(independence_complex(g).facets) == expected


def test_link():
    k = independence_complex(q9())
    assert link(k, ())[0] == k
    circle = independence_complex(cycle_complement(6))
    lk, vertices = link(circle, {0})
    assert vertices == (1, 5)
    assert lk.facets == ({0}, {1})
    lk, vertices = link(circle, {0, 1})
    assert lk.facets == (EMPTY_FACE,) and vertices == ()
    with pytest.raises(ComplexError):
        link(circle, {0, 2})


def test_core():
    cone = from_facets(3, [{0, 1}, {0, 2}])
    assert cone_points(cone) == {0}
    c = core(cone)
    assert c.facets == ({1}, {2})
    assert c.ghost_count == 1
    assert core(c) == c
    assert core(simplex(3)).facets == (EMPTY_FACE,)
    k = independence_complex(q9())
    assert core(k) == k


def test_pseudomanifold():
    for g in [q9(), q12(), p10(), p12(), cycle_complement(5), cycle_complement(8)]:
        assert is_pseudomanifold(independence_complex(g))
    assert not is_pseudomanifold(independence_complex(path(4)))
    assert not is_pseudomanifold(independence_complex(path(3)))
    assert not is_pseudomanifold(from_facets(0, []))


def test_complex_of_b_graph_is_a_path():
    for n in range(4, 11):
        k = independence_complex(b_graph(n))
        assert tuple(f_vector(k)) == (n, n - 1)
        assert k.dimension == 1 and k.is_pure()
        assert is_connected_complex(k)


def test_vertex_links_count_faces():
    rng = np.random.RandomState(3)
    for _ in range(30):
        sets = [rng.choice(7, size=rng.randint(1, 5), replace=False) for _ in range(rng.randint(1, 6))]
        k = from_facets(7, ([int(v) for v in s] for s in sets))
        counts = f_vector(k).counts
        links = [f_vector(link(k, {v})[0]).counts for v in sorted(frozenset().union(*k.facets))]
        for i in range(1, len(counts)):
            assert sum(c[i - 1] if i - 1 < len(c) else 0 for c in links) == (i + 1) * counts[i]
