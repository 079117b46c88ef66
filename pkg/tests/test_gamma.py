import itertools

import pytest

from brsc.boolmat import BoolMatrix, complex_from_matrix
from brsc.errors import PreconditionError
from brsc.flats import all_flats, canonical_matrix, simplify, simplify_matrix
from brsc.gamma import (
    LabeledGraph,
    component_report,
    cross_component_edges_are_faces,
    gamma_m,
    graph_of_flats,
    in_omega1,
    in_omega2,
    predict_gamma_fl,
    proper_part_components,
    superanticliques,
)
from brsc.instances import chhs, full_simplex, noel, occur, random_brsc, random_simple_dim2_matrix, uniform_matroid
from brsc.complex import SimplicialComplex


def E(*pairs):
    return {frozenset(p) for p in pairs}


def test_graph_of_flats_examples():
    g = graph_of_flats(chhs())
    assert g.edges == E("12", "45")
    assert ("3",) in g.components()
    assert graph_of_flats(noel()).edges == E("12", "23", "34", "56")
    k = graph_of_flats(uniform_matroid(3, 5))
    assert len(k.edges) == 10


def test_graph_of_flats_disconnected():
    with pytest.raises(PreconditionError):
        graph_of_flats(SimplicialComplex("abc"))


def test_component_report():
    r = component_report(chhs())
    assert (r.s, r.trivial_sizes) == (1, (1, 2))
    r = component_report(occur(4))
    assert (r.s, r.r) == (4, 0)
    r = component_report(full_simplex(4))
    assert (r.s, r.r) == (1, 0)


def test_cross_component_edges():
    for seed in (0, 1, 2):
        assert cross_component_edges_are_faces(random_brsc(seed, 8, 2))


def test_gamma_m():
    g = gamma_m(canonical_matrix(occur(3)))
    assert len(g.edges) == 3 and len(g.components()) == 3
    m = BoolMatrix.from_rows(["0001", "1110", "1101", "1011", "0111"], cols="abcd")
    assert gamma_m(m).edges == E("ab", "ac", "bc")
    assert gamma_m(BoolMatrix.from_rows(["011", "101", "110"])).edges == set()


def test_superanticliques():
    g = LabeledGraph.from_edges(["a1", "a2", "d1", "d2", "k"], [("d1", "d2"), ("a1", "d1"), ("a1", "d2"), ("a2", "d1"), ("a2", "d2")])
    got = superanticliques(g)
    assert frozenset({"a1", "a2", "k"}) in got
    assert got == {frozenset({"a1", "a2", "k"}), frozenset({"d1", "k"}), frozenset({"d2", "k"})}
    # exhaustive oracle
    vs = g.vertices
    nb = {v: {w for w in vs if frozenset((v, w)) in g.edges} for v in vs}
    brute = set()
    for k in range(2, len(vs) + 1):
        for a in itertools.combinations(vs, k):
            rest = set(vs) - set(a)
            if all(nb[x] | nb[y] == rest for x, y in itertools.combinations(a, 2)):
                brute.add(frozenset(a))
    assert got == brute
    assert superanticliques(LabeledGraph.from_edges("abc", ["ab", "bc", "ac"])) == set()
    two = LabeledGraph.from_edges("abcd", ["ab", "cd"])
    assert superanticliques(two) == {frozenset(p) for p in ("ac", "ad", "bc", "bd")}


def test_omega_recognition():
    two = LabeledGraph.from_edges("abcd", ["ab", "cd"])
    assert in_omega2(two)
    star_plus_point = LabeledGraph.from_edges("abcde", ["ab", "ac", "ad"])
    assert in_omega1(star_plus_point)
    three = LabeledGraph.from_edges("abcdef", ["ab", "cd", "ef"])
    assert not in_omega1(three) and not in_omega2(three)


def test_predict_gamma_fl_examples():
    g = predict_gamma_fl(canonical_matrix(occur(3)))
    assert g != "connected" and g == graph_of_flats(occur(3))
    two_edges = BoolMatrix.from_rows(["0011", "1100", "0111", "1011", "1101", "1110"], cols="abcd")
    assert predict_gamma_fl(two_edges) == "connected"
    assert graph_of_flats(complex_from_matrix(two_edges)).is_connected()


def test_predict_gamma_fl_on_generated():
    for seed in range(40):
        m = random_simple_dim2_matrix(seed, 9, n_lines=1 + seed % 5)
        c = complex_from_matrix(m)
        g = predict_gamma_fl(m)
        direct = graph_of_flats(c)
        if g == "connected":
            assert direct.is_connected()
        else:
            assert g == direct
        for e in gamma_m(m).edges:
            assert e in direct.edges


def test_proper_part_components():
    assert proper_part_components(all_flats(occur(4))) == 4
    from brsc.flats import FlatLattice

    assert proper_part_components(FlatLattice.from_sets("ab", [[], "a", "ab"])) == 1
    assert proper_part_components(all_flats(noel())) == 2


def test_simfun_component_counts():
    for seed in range(15):
        s = simplify(random_brsc(seed, 8, 2))
        assert proper_part_components(all_flats(s)) == len(graph_of_flats(s).components())


def test_graph_json():
    c = chhs()
    js = graph_of_flats(c).to_json(component_report(c))
    assert js["edges"] == [["1", "2"], ["4", "5"]]
    assert [x["nontrivial"] for x in js["components"]] == [True, False, False]
