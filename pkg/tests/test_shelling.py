import pytest

from brsc.complex import SimplicialComplex
from brsc.errors import NotBooleanRepresentable, PreconditionError
from brsc.flats import eta_partition, quotient, simplify
from brsc.homology import reduced_homology
from brsc.instances import chhs, full_simplex, hollow_triangle, noel, occur, random_brsc, uniform_matroid
from brsc.shelling import (
    Shelling,
    betti_from_shelling,
    exhaustive_shellable,
    find_shelling,
    is_shellable,
    lift_shelling,
    search_shelling,
    validate_shelling,
)

NOEL_ORDER = "123 124 125 126 134 156 234 235 236 256 345 346 356 456".split()


def test_validate_examples():
    assert validate_shelling(noel(), NOEL_ORDER) == (True, None)
    two = SimplicialComplex("abcd", ["abc", "bcd"])
    assert validate_shelling(two, ["abc", "bcd"])[0] and validate_shelling(two, ["bcd", "abc"])[0]
    apart = SimplicialComplex("123456", ["123", "456"])
    assert validate_shelling(apart, ["123", "456"]) == (False, 1)
    with pytest.raises(PreconditionError):
        validate_shelling(apart, ["123"])


def test_is_shellable_examples():
    assert is_shellable(noel())
    assert is_shellable(chhs())
    for t in range(3, 6):
        assert not is_shellable(occur(t))
    with pytest.raises(NotBooleanRepresentable):
        is_shellable(SimplicialComplex("1234", ["123", "14"]))


def test_dimension_one_rule():
    for edges in (["ab", "ac", "ad"], ["ab", "ac", "bd", "cd"]):
        c = SimplicialComplex("abcd", edges)
        assert is_shellable(c) and exhaustive_shellable(c)
    assert is_shellable(uniform_matroid(2, 4))
    with pytest.raises(NotBooleanRepresentable):
        is_shellable(SimplicialComplex("abcd", ["ab", "cd"]))


def test_find_shelling_examples():
    for c in (noel(), chhs(), full_simplex(3)):
        s = find_shelling(c)
        assert validate_shelling(c, s.order)[0]
    assert find_shelling(full_simplex(3)).order == [("1", "2", "3")]
    with pytest.raises(PreconditionError):
        find_shelling(occur(3))


def test_lift_identity_and_chhs():
    c = chhs()
    base = find_shelling(c)
    same = lift_shelling(c, [(v,) for v in c.vertices], base)
    assert same.order == base.order
    hs, _ = quotient(c, eta_partition(c))
    lifted = lift_shelling(c, eta_partition(c), search_shelling(hs))
    assert validate_shelling(c, lifted.order)[0]


def test_lift_three_element_block():
    # 3, 4, 5 pairwise non-adjacent: one closure class of size 3
    c = SimplicialComplex("12345", ["123", "124", "125", "13", "14", "15"])
    assert eta_partition(c).blocks == (("1",), ("2",), ("3", "4", "5"))
    hs, _ = quotient(c, eta_partition(c))
    out = lift_shelling(c, eta_partition(c), search_shelling(hs))
    assert validate_shelling(c, out.order)[0]
    assert len(out.order) == 3


def test_lift_rejects_bad_partition():
    c = chhs()
    with pytest.raises(PreconditionError):
        lift_shelling(c, [("1", "2")], find_shelling(c))


def test_betti_from_shelling():
    c = hollow_triangle()
    s = find_shelling(c)
    assert betti_from_shelling(c, Shelling([("a", "b"), ("a", "c"), ("b", "c")])) == [0, 1]
    assert betti_from_shelling(full_simplex(3), find_shelling(full_simplex(3))) == [0, 0, 0]
    n = noel()
    assert betti_from_shelling(n, find_shelling(n)) == reduced_homology(n).betti


def test_search_agrees_with_permutations():
    checked = 0
    for seed in range(200):
        c = random_brsc(seed, 6, 2)
        if len(c.facets) > 8:
            continue
        checked += 1
        assert is_shellable(c) == exhaustive_shellable(c) == (search_shelling(c) is not None)
    assert checked >= 10


def test_search_timeout():
    from brsc.shelling import SearchTimeout

    c = SimplicialComplex("123456789", ["123", "456", "789"])
    assert search_shelling(c, timeout_ms=1000) is None


def test_shelling_json():
    js = find_shelling(hollow_triangle()).to_json()
    assert js["order"][0] == ["a", "b"] and js["homology_facets"] == [2]
