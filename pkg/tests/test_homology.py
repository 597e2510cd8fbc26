import numpy as np
import pytest
from sympy import Matrix, GF
from sympy.polys.matrices import DomainMatrix

from edgesquare.complex import independence_complex, from_facets, ComplexError
from edgesquare.gallery import cycle, path, complete, cycle_complement, q9, q12, p10, p12
from edgesquare.homology import PrimeField, FieldError, GF2, GF32003, boundary_matrix, rank_mod_p, \
    reduced_betti_numbers, link_profiles, is_cm_complex, is_gorenstein_complex


def sympy_rank(m, p):
    return DomainMatrix.from_Matrix(Matrix(m.tolist())).convert_to(GF(p)).rank()


def test_prime_field():
    assert str(PrimeField(3)) == "GF(3)"
    assert PrimeField(2 ** 31 - 1).p == 2 ** 31 - 1
    for bad in [0, 1, 4, 32001, 2 ** 31 + 11]:
        with pytest.raises(FieldError):
            PrimeField(bad)


def test_boundary_matrix():
    points = independence_complex(complete(3))
    assert boundary_matrix(points, 0, GF2).tolist() == [[1, 1, 1]]
    circle = independence_complex(cycle_complement(6))
    d1 = boundary_matrix(circle, 1, GF32003)
    assert d1.shape == (6, 6)
    assert sorted(set(d1.flatten().tolist())) == [0, 1, 32002]
    assert rank_mod_p(boundary_matrix(circle, 1, GF2), 2) == 5
    with pytest.raises(ComplexError):
        boundary_matrix(circle, 2, GF2)


def test_boundary_of_boundary_vanishes():
    for field in [GF2, PrimeField(3), GF32003]:
        k = independence_complex(q12())
        for i in range(1, k.dimension + 1):
            product = boundary_matrix(k, i - 1, field) @ boundary_matrix(k, i, field) % field.p
            assert not product.any()


def test_rank_agrees_with_sympy():
    rng = np.random.RandomState(0)
    for p in [2, 3, 7, 32003]:
        for _ in range(10):
            m = rng.randint(0, 3, size=(rng.randint(1, 8), rng.randint(1, 8)))
            assert rank_mod_p(m, p) == sympy_rank(m, p)
        k = independence_complex(q9())
        for i in range(k.dimension + 1):
            m = boundary_matrix(k, i, PrimeField(p))
            assert rank_mod_p(m, p) == sympy_rank(m, p)


def test_spheres():
    for field in [GF2, GF32003]:
        for n in range(4, 13):
            assert reduced_betti_numbers(independence_complex(cycle_complement(n)), field).betti == (0, 0, 1)
        for g in [q9(), p10(), p12()]:
            assert reduced_betti_numbers(independence_complex(g), field).betti == (0, 0, 0, 1)
        assert reduced_betti_numbers(independence_complex(q12()), field).betti == (0, 0, 0, 0, 1)


def test_betti_of_small_complexes():
    assert reduced_betti_numbers(from_facets(0, [])).betti == (1,)
    profile = reduced_betti_numbers(independence_complex(complete(3)))
    assert profile.betti == (0, 2) and profile.dimension == 0
    assert reduced_betti_numbers(independence_complex(path(4))).betti == (0, 0, 0)
    assert reduced_betti_numbers(independence_complex(cycle(4))).to_dict() == dict(char=2, betti=[0, 1, 0])


def test_link_profiles():
    circle = independence_complex(cycle_complement(5))
    profiles = link_profiles(circle)
    assert len(profiles) == 1 + 5 + 5
    assert profiles[0][0] == frozenset()
    assert all(profile.is_sphere() for _, profile in profiles)


def test_cohen_macaulay():
    assert is_cm_complex(independence_complex(cycle(5)))
    assert is_cm_complex(independence_complex(q12()))
    assert is_cm_complex(independence_complex(complete(4)))
    assert not is_cm_complex(independence_complex(path(3)))
    assert not is_cm_complex(independence_complex(cycle(4)))


def test_gorenstein():
    assert is_gorenstein_complex(independence_complex(complete(2)))
    assert not is_gorenstein_complex(independence_complex(complete(3)))
    assert not is_gorenstein_complex(independence_complex(path(4)))
    for g in [cycle_complement(7), q9(), q12(), p10(), p12()]:
        assert is_gorenstein_complex(independence_complex(g), GF32003)
    # a cone over a circle is Gorenstein through its core
    cone = from_facets(5, [{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}])
    assert is_gorenstein_complex(cone)
