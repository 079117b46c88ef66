import pytest

from brsc.complex import SimplicialComplex, classify, facets, graph_diameter_check, is_matroid, link, pure_part
from brsc.errors import PreconditionError
from brsc.instances import chhs, full_simplex, noel, occur, uniform_matroid, yesel

NOEL_FACETS = "123 124 125 126 134 156 234 235 236 256 345 346 356 456".split()


def test_facets():
    assert facets(SimplicialComplex("abc", ["abc"])) == {("a", "b", "c")}
    assert facets(noel()) == {tuple(f) for f in NOEL_FACETS}
    c = chhs()
    brute = {f for f in c.face_sets() if not any(f < g for g in c.face_sets())}
    assert {frozenset(f) for f in facets(c)} == brute
    assert {frozenset(f) for f in facets(c)} == {frozenset(x) for x in ("123", "124", "125", "34", "35")}


def test_classify():
    p = classify(occur(3))
    assert (p.dimension, p.simple, p.pure, p.connected) == (2, True, True, True)
    assert not classify(SimplicialComplex("abc")).connected
    assert classify(noel()).pure
    assert not classify(chhs()).pure


def test_link():
    c = noel()
    assert link(c, []) == c
    assert "23" in link(c, "1")
    lk = link(c, "123")
    assert lk.n == 0 and lk.dim == -1
    with pytest.raises(PreconditionError):
        link(chhs(), "45")


def test_pure_part():
    f = full_simplex(3)
    assert pure_part(f, 2) == f
    p = pure_part(chhs(), 2)
    assert set(p.vertices) == set("12345")
    assert {frozenset(x) for x in facets(p)} == {frozenset(x) for x in ("123", "124", "125")}
    assert "34" not in p
    with pytest.raises(PreconditionError):
        pure_part(f, 3)


def test_is_matroid():
    ok, witness = is_matroid(yesel())
    assert not ok and witness == (("1", "2", "3"), ("5", "7"))
    assert is_matroid(full_simplex(4)) == (True, None)
    assert is_matroid(uniform_matroid(2, 3))[0]


def test_graph_diameter():
    assert graph_diameter_check(occur(3))
    assert graph_diameter_check(noel())
    path = SimplicialComplex("abcd", ["ab", "bc", "cd"])
    with pytest.raises(PreconditionError):
        graph_diameter_check(path)


def test_construction_closes_downward():
    c = SimplicialComplex("abcd", ["abc"])
    assert "ab" in c and "d" in c and "" in c
    assert c.dim == 2 and c.label(0) == "{}"


def test_restrict_order_preserves_faces():
    c = chhs()
    r = c.restrict_order("54321")
    assert r == c and r.vertices == tuple("54321")
