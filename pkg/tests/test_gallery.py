import networkx as nx
import numpy as np
import pytest

from edgesquare.gallery import complete, cycle, path, cycle_complement, b_graph, q9, q12, p10, p12, construct, \
    gallery, match_gallery, is_isomorphic, invariant, q12_table, parse_labeled_set, GalleryId, LABELS
from edgesquare.graph import GraphError, complement, relabel, disjoint_union, to_networkx
from edgesquare.independence import maximal_independent_sets


def test_families():
    assert complete(4).edge_count == 6
    assert cycle_complement(6).edge_count == 9
    assert path(4).edges == [(0, 1), (1, 2), (2, 3)]
    assert b_graph(4).edges == [(0, 2), (0, 3), (1, 3)]
    assert b_graph(5, literal=True).isolated_vertices() == [0]
    assert not b_graph(5).isolated_vertices()
    for bad in [lambda: complete(0), lambda: cycle(2), lambda: cycle_complement(3), lambda: b_graph(3),
                lambda: construct("Petersen", 10), lambda: construct("Cycle")]:
        with pytest.raises(GraphError):
            bad()


def test_exceptional_graphs():
    assert [g.edge_count for g in [q9(), q12(), p10(), p12()]] == [15, 21, 21, 36]
    assert sorted(q9().degrees()) == [3] * 6 + [4] * 3
    assert p12().degrees() == [6] * 12
    assert len(LABELS["P12"]) == p12().n


def test_p12_is_the_complement_of_the_icosahedron():
    h = nx.complement(to_networkx(p12()))
    assert nx.is_isomorphic(h, nx.icosahedral_graph())


def test_q12_facet_table():
    assert parse_labeled_set("ab1b2c3") == ["a", "b1", "b2", "c3"]
    table = q12_table()
    assert len(set(table)) == 33
    assert set(maximal_independent_sets(q12())) == set(table)


def test_is_isomorphic():
    assert is_isomorphic(cycle(4), cycle(4)) == (0, 1, 2, 3)
    assert is_isomorphic(cycle(5), complement(cycle(5))) is not None
    assert is_isomorphic(cycle(6), complement(cycle(6))) is None
    assert is_isomorphic(path(4), b_graph(4)) is not None
    assert is_isomorphic(q12(), p12()) is None
    # same degree sequence, not isomorphic
    assert is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))) is None


def test_is_isomorphic_agrees_with_networkx():
    rng = np.random.RandomState(0)
    for g in [q9(), p10(), cycle_complement(7), b_graph(6)]:
        perm = [int(x) for x in rng.permutation(g.n)]
        h = relabel(g, perm)
        witness = is_isomorphic(h, g)
        assert witness is not None
        assert relabel(h, witness) == g
        assert nx.is_isomorphic(to_networkx(h), to_networkx(g))


def test_invariant_is_relabeling_invariant():
    rng = np.random.RandomState(1)
    for g in [q9(), q12(), path(6)]:
        assert invariant(g) == invariant(relabel(g, [int(x) for x in rng.permutation(g.n)]))


def test_match_gallery():
    assert match_gallery(complete(3)) == GalleryId("Complete", 3, (0, 1, 2))
    assert str(match_gallery(complement(cycle(7)))) == "CycleComplement(7)"
    assert str(match_gallery(cycle(5))) == "CycleComplement(5)"
    assert match_gallery(path(4)).family == "B"
    assert match_gallery(cycle(6)) is None
    rng = np.random.RandomState(2)
    for name in ["Q9", "Q12", "P10", "P12"]:
        g = construct(name)
        h = relabel(g, [int(x) for x in rng.permutation(g.n)])
        match = match_gallery(h)
        assert match.family == name and match.parameter is None
        assert relabel(h, match.witness) == g


def test_gallery():
    names = gallery(6)
    assert "Complete(1)" in names and "B(4)" in names and "CycleComplement(6)" in names
    assert "Q9" not in names
    assert set(gallery(12)) >= {"Q9", "Q12", "P10", "P12"}


def test_match_gallery_recovers_every_construction():
    cases = [("Complete", n) for n in range(1, 11)]
    cases += [(family, n) for family in ["CycleComplement", "B"] for n in range(4, 11)]
    cases += [(name, None) for name in ["Q9", "Q12", "P10", "P12"]]
    for family, n in cases:
        g = construct(family, n)
        match = match_gallery(g)
        assert (match.family, match.parameter) == (family, n)
        assert str(match) == (family if n is None else f"{family}({n})")
        assert relabel(g, match.witness) == g
