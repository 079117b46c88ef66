import itertools

import numpy as np
import pytest

from brsc.boolmat import (
    BoolMatrix,
    complex_from_matrix,
    is_independent,
    is_nonsingular,
    line_masks,
    lines,
    make_reduced,
    row_bound,
)
from brsc.errors import PreconditionError, RepresentationError
from brsc.flats import canonical_matrix
from brsc.instances import chhs, noel

from .oracles import independent_brute, nonsingular_by_permutation


def test_nonsingular_small_cases():
    assert is_nonsingular(BoolMatrix.from_rows(["1"]))
    assert not is_nonsingular(BoolMatrix.from_rows(["00", "00"]))
    assert is_nonsingular(BoolMatrix.from_rows(["100", "110", "111"]))


def test_nonsingular_rejects_non_square():
    with pytest.raises(PreconditionError):
        is_nonsingular(BoolMatrix.from_rows(["10", "01", "11"]))


def test_nonsingular_matches_permutations_3x3():
    for code in range(1 << 9):
        rows = [[(code >> (3 * i + j)) & 1 for j in range(3)] for i in range(3)]
        assert is_nonsingular(BoolMatrix.from_rows(rows)) == nonsingular_by_permutation(np.array(rows))


def test_independent_basics():
    m = BoolMatrix.from_rows(["101", "011"], cols="abc")
    assert is_independent(m, [])
    assert is_independent(m, ["a"])
    with pytest.raises(PreconditionError):
        is_independent(m, ["z"])


def test_chhs_canonical_matrix_45_dependent():
    m = canonical_matrix(chhs())
    assert not is_independent(m, ["4", "5"])
    assert independent_brute(m.to_lists(), [3, 4]) is False
    assert m.shape == (6, 5)


def test_make_reduced_drops_repeats_keeps_faces():
    m = BoolMatrix.from_rows(["0110", "0110", "1011", "0000", "1101"], cols="abcd")
    r = make_reduced(m)
    assert r.shape == (3, 4)
    assert r.is_reduced
    assert complex_from_matrix(r).faces == complex_from_matrix(BoolMatrix.from_rows(["0110", "1011", "1101"], cols="abcd")).faces
    # same independent sets as the unreduced matrix, by brute force
    for k in range(5):
        for x in itertools.combinations(range(4), k):
            assert r.independent_mask(sum(1 << i for i in x)) == independent_brute(m.to_lists(), x)
    assert make_reduced(r) == r


def test_make_reduced_zero_column():
    with pytest.raises(RepresentationError):
        make_reduced(BoolMatrix.from_rows(["10", "10"]))


def test_lines():
    assert lines(canonical_matrix(noel())) == {frozenset(p) for p in ("12", "23", "34", "56")}
    ident = BoolMatrix.from_rows(["1000", "0100", "0010", "0001"])
    assert len(line_masks(ident)) == 4 and all(bin(z).count("1") == 3 for z in line_masks(ident))
    assert lines(BoolMatrix.from_rows(["011", "101", "111"])) == set()


def test_complex_from_matrix_chhs_round_trip():
    c = chhs()
    assert complex_from_matrix(canonical_matrix(c)).faces == c.faces


def test_complex_from_matrix_one_by_one():
    c = complex_from_matrix(BoolMatrix.from_rows(["1"], cols=["v"]))
    assert c.dim == 0 and len(c.faces) == 2


def test_identity_3x3_by_brute_force():
    m = BoolMatrix.from_rows(["100", "010", "001"])
    c = complex_from_matrix(m)
    for k in range(4):
        for x in itertools.combinations(range(3), k):
            assert (sum(1 << i for i in x) in c.faces) == independent_brute(m.to_lists(), x)
    assert c.dim == 2


def test_expected_dim_errors():
    m = BoolMatrix.from_rows(["100", "010", "001"])
    with pytest.raises(RepresentationError):
        complex_from_matrix(m, expected_dim=1)
    many = BoolMatrix.from_rows([format(i, "03b") for i in range(1, 8)])
    assert row_bound(3, 0) == 1
    with pytest.raises(RepresentationError):
        complex_from_matrix(many, expected_dim=0)


def test_faces_down_closed_with_singletons():
    rng = np.random.default_rng(3)
    for _ in range(30):
        rows = rng.integers(0, 2, size=(5, 6))
        rows[0] = 1
        c = complex_from_matrix(BoolMatrix.from_rows(rows.tolist()))
        for f in c.faces:
            for i in range(6):
                assert (f & ~(1 << i)) in c.faces
        assert all(1 << i in c.faces for i in range(6))


def test_label_validation():
    with pytest.raises(ValueError):
        BoolMatrix.from_rows(["10", "1"])
    with pytest.raises(ValueError):
        BoolMatrix.from_rows(["12"])
